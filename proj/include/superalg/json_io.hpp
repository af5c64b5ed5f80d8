#pragma once

#include "superalg/derivations.hpp"
#include "superalg/lie_super.hpp"
#include "superalg/polydiff_jets.hpp"
#include "superalg/straightening.hpp"
#include "superalg/super_derham.hpp"
#include "superalg/super_tensor.hpp"
#include "superalg/supermaps.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace sa {

using json = nlohmann::json;

// schema violation; where is a JSON pointer into the document
struct JsonError : std::runtime_error {
  std::string where;
  JsonError(std::string w, const std::string& msg) : std::runtime_error(msg), where(std::move(w)) {}
};

// parse text, reporting syntax errors as JsonError with "line L, column C"
json parse_json(const std::string& text);
json read_json_file(const std::string& path);

json to_json(const Scalar& s);
Scalar scalar_from_json(const json& j, const std::string& at = "");
int int_from_json(const json& j, const std::string& at = "");
const json& field(const json& j, const char* key, const std::string& at = "");

json to_json(const ExtElem& a);
ExtElem ext_from_json(const json& j, int n, const std::string& at = "");

json to_json(const Poly& p);
Poly poly_from_json(const json& j, int m, const std::string& at = "");
json to_json(const PolyMatrix& M);
PolyMatrix poly_matrix_from_json(const json& j, int m, int rows, int cols, const std::string& at = "");

json to_json(const QMatrix& M);
QMatrix matrix_from_json(const json& j, const std::string& at = "");

// {"n": n, "images": [ExtElem, ...]}
json to_json(const GenImageMap& F);
GenImageMap images_from_json(const json& j, const std::string& at = "");
// {"parity": "even|odd", "n": n, "images": [...]}
json to_json(const SuperDerivation& D);
SuperDerivation superderivation_from_json(const json& j, const std::string& at = "");

// {"even_dim": p, "odd_dim": q, "brackets": [{"i": i, "j": j, "coeffs": [...]}]}, indices 1-based
json to_json(const LieSuperData& L);
LieSuperData lie_from_json(const json& j, const std::string& at = "");

// {"coeff": c, "factors": [g, ...]} with generators 1..even_dim even and the rest odd; normal forms
// are written as {"coeff": c, "even": [...], "odd": [...]}
TensorWord word_from_json(const json& j, const SuperSpace& V, const std::string& at = "");
json to_json_supersym(const SuperSpace& V, const SuperSymElem& a);
json to_json_superext(const SuperSpace& V, const SuperExtElem& a);

// {"s": s, "family": [[ExtElem × s] × k]}
OddFamily family_from_json(const json& j, const std::string& at = "");

// {"m": m, "r_out": r, "r_in": r', "terms": [{"alpha": [...], "matrix": [[Poly]]}]}
json to_json(const PolyDiffOp& D);
PolyDiffOp diffop_from_json(const json& j, const std::string& at = "");

// [{"coeff": c, "exps": [...], "ext": [...]}]
json to_json(const SymExt& f);
SymExt superfunc_from_json(const json& j, int m, int p, const std::string& at = "");
json to_json(const SuperMapData& Phi);
SuperMapData supermap_from_json(const json& j, const std::string& at = "");

// {"m": m, "n": n, "A": [[[Poly]]]} with A[i-1][α-1][β-1]
json to_json(const OddConnection& A);
OddConnection connection_from_json(const json& j, const std::string& at = "");
// [{"coeff": c, "x": [...], "dx": [...], "dth": [...], "th": [...]}]
json to_json(const SuperForm& w);
SuperForm superform_from_json(const json& j, int m, int n, const std::string& at = "");

}  // namespace sa
