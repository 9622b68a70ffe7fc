#include "polyprime/io.hpp"

namespace polyprime {

namespace {

uint32_t parse_element(const nlohmann::json& j, const FieldPtr& f) {
    if (j.is_number_integer()) {
        long long v = j.get<long long>();
        if (f->degree() > 1 && (v < 0 || static_cast<uint64_t>(v) >= f->size()))
            throw std::invalid_argument("extension-field element index out of range");
        long long p = static_cast<long long>(f->characteristic());
        if (f->degree() == 1) return static_cast<uint32_t>(((v % p) + p) % p);
        return static_cast<uint32_t>(v);
    }
    if (j.is_array()) {
        // base-p digit list, low-to-high
        uint64_t out = 0, mult = 1;
        for (const auto& d : j) {
            long long v = d.get<long long>();
            long long p = static_cast<long long>(f->characteristic());
            out += static_cast<uint64_t>(((v % p) + p) % p) * mult;
            mult *= f->characteristic();
        }
        if (out >= f->size()) throw std::invalid_argument("element digits exceed field degree");
        return static_cast<uint32_t>(out);
    }
    throw std::invalid_argument("bad field element literal");
}

Poly parse_poly(const nlohmann::json& j, const FieldPtr& f) {
    if (!j.is_array()) throw std::invalid_argument("polynomial literal must be a coefficient list");
    std::vector<uint32_t> c;
    c.reserve(j.size());
    for (const auto& e : j) c.push_back(parse_element(e, f));
    return Poly(f, std::move(c));
}

}  // namespace

PolyMat parse_poly_matrix(const nlohmann::json& j, const FieldPtr& f) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix literal must be a nonempty array");
    int rows = static_cast<int>(j.size());
    int cols = static_cast<int>(j[0].size());
    PolyMat m(f, rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(j[static_cast<size_t>(i)].size()) != cols)
            throw std::invalid_argument("ragged matrix literal");
        for (int c = 0; c < cols; ++c)
            m.at(i, c) = parse_poly(j[static_cast<size_t>(i)][static_cast<size_t>(c)], f);
    }
    return m;
}

nlohmann::json poly_matrix_to_json(const PolyMat& m) {
    nlohmann::json j = nlohmann::json::array();
    for (int i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < m.cols(); ++c) {
            nlohmann::json coeffs = nlohmann::json::array();
            for (uint32_t v : m.at(i, c).coeffs()) coeffs.push_back(v);
            if (coeffs.empty()) coeffs.push_back(0);
            row.push_back(std::move(coeffs));
        }
        j.push_back(std::move(row));
    }
    return j;
}

Mat parse_scalar_matrix(const nlohmann::json& j, const FieldPtr& f) {
    if (!j.is_array()) throw std::invalid_argument("matrix literal must be an array");
    int rows = static_cast<int>(j.size());
    int cols = rows ? static_cast<int>(j[0].size()) : 0;
    Mat m(f, rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(j[static_cast<size_t>(i)].size()) != cols)
            throw std::invalid_argument("ragged matrix literal");
        for (int c = 0; c < cols; ++c)
            m.at(i, c) = parse_element(j[static_cast<size_t>(i)][static_cast<size_t>(c)], f);
    }
    return m;
}

nlohmann::json scalar_matrix_to_json(const Mat& m) {
    nlohmann::json j = nlohmann::json::array();
    for (int i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(i, c));
        j.push_back(std::move(row));
    }
    return j;
}

StateSpace parse_state_space(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("field"))
        throw std::invalid_argument("system literal must be an object with a \"field\" key");
    FieldPtr f = Field::parse(j.at("field").get<std::string>());
    Mat a = parse_scalar_matrix(j.at("A"), f);
    Mat b = parse_scalar_matrix(j.at("B"), f);
    Mat c = j.contains("C") ? parse_scalar_matrix(j.at("C"), f) : Mat::identity(f, a.rows());
    Mat d = j.contains("D") ? parse_scalar_matrix(j.at("D"), f) : Mat(f, c.rows(), b.cols());
    return StateSpace(std::move(a), std::move(b), std::move(c), std::move(d));
}

nlohmann::json state_space_to_json(const StateSpace& sys) {
    return nlohmann::json{{"field", sys.field()->name()},
                          {"A", scalar_matrix_to_json(sys.a)},
                          {"B", scalar_matrix_to_json(sys.b)},
                          {"C", scalar_matrix_to_json(sys.c)},
                          {"D", scalar_matrix_to_json(sys.d)}};
}

}  // namespace polyprime
