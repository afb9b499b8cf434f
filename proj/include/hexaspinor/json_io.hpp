#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include <hexaspinor/tensor.hpp>
#include <hexaspinor/types.hpp>

namespace hexaspinor {

// Wire format for tensors: {"shape": [ints], "entries": [[re, im], ...]}
// row-major; complex scalars always serialize as [re, im].
nlohmann::json tensor_to_json(const CTensor& t);
CTensor tensor_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const MatX& m);
MatX matrix_from_json(const nlohmann::json& j, int rows, int cols);

nlohmann::json vector_to_json(const VecX& v);
VecX vector_from_json(const nlohmann::json& j, int size);

// fixed 17-significant-digit float formatting for byte-stable output
std::string format_double(double x);

}  // namespace hexaspinor
