#include "qhopf/serialize.hpp"

#include <stdexcept>

#include <nlohmann/json.hpp>

namespace qhopf {

using nlohmann::json;

json to_json(const SpaceDescriptor& space) {
    json factors = json::array();
    for (const auto& f : space.factors)
        factors.push_back({{"label", f.label}, {"cutoff", f.cutoff}});
    return {{"factors", factors}, {"total_dim", space.total_dim}};
}

namespace {

json complex_array(const Vector& v) {
    json arr = json::array();
    for (long i = 0; i < v.size(); ++i)
        arr.push_back({v(i).real(), v(i).imag()});
    return arr;
}

}  // namespace

json to_json(const Operator& op) {
    json arr = json::array();
    for (long i = 0; i < op.matrix.rows(); ++i)
        for (long j = 0; j < op.matrix.cols(); ++j)
            arr.push_back({op.matrix(i, j).real(), op.matrix(i, j).imag()});
    return {{"space", to_json(op.space)}, {"matrix", arr}};
}

json to_json(const StateVector& state) {
    return {{"space", to_json(state.space)},
            {"amplitudes", complex_array(state.amplitudes)},
            {"normalized", state.normalized}};
}

SpaceDescriptor space_from_json(const json& j) {
    std::vector<std::pair<std::string, int>> modes;
    for (const auto& f : j.at("factors"))
        modes.emplace_back(f.at("label").get<std::string>(), f.at("cutoff").get<int>());
    SpaceDescriptor space = make_space(modes);
    if (j.contains("total_dim") && j.at("total_dim").get<long>() != space.total_dim)
        throw std::invalid_argument("space_from_json: inconsistent total_dim");
    return space;
}

Operator operator_from_json(const json& j) {
    SpaceDescriptor space = space_from_json(j.at("space"));
    const json& arr = j.at("matrix");
    if (long(arr.size()) != space.total_dim * space.total_dim)
        throw std::invalid_argument("operator_from_json: matrix size mismatch");
    Matrix m(space.total_dim, space.total_dim);
    long k = 0;
    for (long i = 0; i < space.total_dim; ++i)
        for (long jj = 0; jj < space.total_dim; ++jj, ++k)
            m(i, jj) = Complex(arr[k][0].get<double>(), arr[k][1].get<double>());
    return {space, std::move(m)};
}

StateVector state_from_json(const json& j) {
    SpaceDescriptor space = space_from_json(j.at("space"));
    const json& arr = j.at("amplitudes");
    if (long(arr.size()) != space.total_dim)
        throw std::invalid_argument("state_from_json: amplitude count mismatch");
    Vector v(space.total_dim);
    for (long i = 0; i < space.total_dim; ++i)
        v(i) = Complex(arr[i][0].get<double>(), arr[i][1].get<double>());
    return {space, std::move(v), j.value("normalized", false)};
}

}  // namespace qhopf
