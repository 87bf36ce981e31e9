#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "tridec/tensor.hpp"

namespace tridec {

// A parsed tensor document.  Rational "p/q" strings anywhere in the document
// select exact mode for the whole document; exact documents also carry a
// float view for the numeric paths.  Mixing rational strings with
// non-integer numbers is rejected.
struct TensorDocument {
    bool exact = false;
    SymTensor3<Rat> rat{0};
    SymTensor3<double> dbl{0};
};

TensorDocument parse_tensor_document(const nlohmann::json& j);
TensorDocument load_tensor_file(const std::string& path);

nlohmann::json tensor_json(const SymTensor3<Rat>& t);
nlohmann::json tensor_json(const SymTensor3<double>& t);

// FNV-1a 64-bit content digest used to stamp reports.
std::string digest_hex(std::string_view bytes);

}  // namespace tridec
