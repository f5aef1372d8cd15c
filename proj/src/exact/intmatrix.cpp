// IntMatrix lives in cyclo.cpp; this unit holds the JSON interchange helpers.
#include <stdexcept>

#include "lac/linalg.hpp"

namespace lac {

nlohmann::json matrix_to_json(const IntMatrix& m) {
    nlohmann::json e = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        nlohmann::json r = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols; ++j) r.push_back(m(i, j).get_str());
        e.push_back(std::move(r));
    }
    return {{"rows", m.rows}, {"cols", m.cols}, {"entries", e}};
}

IntMatrix matrix_from_json(const nlohmann::json& j) {
    IntMatrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
    const auto& e = j.at("entries");
    if (e.size() != m.rows) throw std::invalid_argument("matrix json: row count");
    for (std::size_t i = 0; i < m.rows; ++i) {
        if (e[i].size() != m.cols) throw std::invalid_argument("matrix json: col count");
        for (std::size_t k = 0; k < m.cols; ++k) {
            const auto& v = e[i][k];
            m(i, k) = v.is_string() ? Int(v.get<std::string>()) : Int(v.get<long>());
        }
    }
    return m;
}

}  // namespace lac
