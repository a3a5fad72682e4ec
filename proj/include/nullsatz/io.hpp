#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "nullsatz/findim.hpp"
#include "nullsatz/leftideal.hpp"

namespace nullsatz {

using json = nlohmann::json;

using AnyAlgebra = std::variant<FinDimAlgebra<FiniteField>, FinDimAlgebra<NumberField>>;

struct AlgebraSource {
  std::string label;  // preset name or file path
  AnyAlgebra algebra;
};

// Presets: Mn(q), Mn(Q), dual_numbers(q), F_q[eps], F_q, F_q[u]/f, group:Cn(q), upper_triangular:n(q), H(Q).
// q may be a prime power; the algebra is then viewed over F_p.
std::vector<std::string> preset_examples();
bool is_preset(const std::string& name);
AlgebraSource algebra_preset(const std::string& name);

// Preset name, or a path to algebra JSON.
AlgebraSource load_algebra(const std::string& spec);

// {"field": ..., "dim": d, "unit": [...], "structure": [[[...]]], "names": [...]}
AnyAlgebra algebra_from_json(const json& j);
template <class F>
json algebra_to_json(const FinDimAlgebra<F>& a);

// {"base": {"Fp": p} | "Q", "tower": [{"var": "t", "minpoly": [c0, ..., 1]}]}
FiniteField finite_field_from_json(const json& j);
template <class F>
json field_to_json(const F& f);

// prime field: integer (or "num/den" over Q); extensions: coordinate array over the prime field
template <class F>
json elem_to_json(const F& f, const typename F::Elem& a);
template <class F>
typename F::Elem elem_from_json(const F& f, const json& j);

template <class F>
json ideal_to_json(const LeftIdeal<F>& i, const std::vector<std::string>& vars);

std::string read_file(const std::string& path);

}  // namespace nullsatz
