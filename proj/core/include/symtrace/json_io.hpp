#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "symtrace/fiber.hpp"
#include "symtrace/graphs.hpp"
#include "symtrace/operators.hpp"
#include "symtrace/symspace.hpp"
#include "symtrace/traceid.hpp"

// JSON forms of the library types. Rationals are strings "p/q" (or "p");
// decoders also accept JSON integers. Every decoder throws InvalidInput on
// malformed input.
namespace symtrace::json_io {

using nlohmann::json;

json encode(const Rational& q);
json encode(const Matrix& m);  // array of rows
json encode(const SymTensor& s);
json encode(const OperatorWord& w);
json encode(const UGraph& g);
json encode(const FiberInstance& inst);
json encode(const Certificate& c);
json encode(const TraceReport& report);
json encode(const PhiCheck& check);
json encode(const TensorPow& t);
json encode_permutation(const Permutation& sigma);  // 1-based images

Rational decode_rational(const json& j);
RationalVector decode_vector(const json& j);
Matrix decode_matrix(const json& j);
SymTensor decode_sym_tensor(const json& j);
OperatorWord decode_word(const json& j);
UGraph decode_graph(const json& j);
FiberInstance decode_instance(const json& j);
Certificate decode_certificate(const json& j);
Permutation decode_permutation(const json& j);  // 1-based images

// Parses text; wraps parser failures as InvalidInput.
json parse(const std::string& text);
// FNV-1a over the compact dump, as 16 hex digits.
std::string content_hash(const json& j);

}  // namespace symtrace::json_io
