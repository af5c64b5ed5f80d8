#include "superalg/json_io.hpp"

#include <fstream>
#include <sstream>

namespace sa {

namespace {

std::string at_index(const std::string& at, size_t i) { return at + "/" + std::to_string(i); }
std::string at_key(const std::string& at, const char* k) { return at + "/" + k; }

const json& expect_array(const json& j, const std::string& at) {
  if (!j.is_array()) throw JsonError(at.empty() ? "/" : at, "expected an array");
  return j;
}

const json& expect_object(const json& j, const std::string& at) {
  if (!j.is_object()) throw JsonError(at.empty() ? "/" : at, "expected an object");
  return j;
}

std::vector<int> int_list(const json& j, const std::string& at) {
  std::vector<int> r;
  expect_array(j, at);
  for (size_t i = 0; i < j.size(); ++i) r.push_back(int_from_json(j[i], at_index(at, i)));
  return r;
}

Mask index_set(const json& j, int n, const std::string& at) {
  try {
    return mask_of(int_list(j, at), n);
  } catch (const DomainError& e) {
    throw JsonError(at, e.what());
  }
}

MultiDegree exponents(const json& j, int m, const std::string& at) {
  auto d = int_list(j, at);
  if (int(d.size()) != m) throw JsonError(at, "expected " + std::to_string(m) + " exponents");
  for (int e : d)
    if (e < 0) throw JsonError(at, "negative exponent");
  return d;
}

json index_list(Mask m) { return json(indices(m)); }

int dim_field(const json& j, const char* key, const std::string& at, int hi = 62) {
  int v = int_from_json(field(j, key, at), at_key(at, key));
  if (v < 0 || v > hi) throw JsonError(at_key(at, key), "dimension out of range");
  return v;
}

}  // namespace

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    size_t line = 1, col = 1;
    for (size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw JsonError("line " + std::to_string(line) + ", column " + std::to_string(col), "malformed JSON");
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw JsonError(path, "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_json(ss.str());
  } catch (const JsonError& e) {
    throw JsonError(path + ": " + e.where, e.what());
  }
}

json to_json(const Scalar& s) { return s.get_str(); }

Scalar scalar_from_json(const json& j, const std::string& at) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (!j.is_string()) throw JsonError(at, "expected a rational \"p/q\"");
  const std::string s = j.get<std::string>();
  Scalar r;
  if (s.empty() || r.set_str(s, 10) != 0) throw JsonError(at, "cannot read \"" + s + "\" as a rational");
  if (sgn(r.get_den()) == 0) throw JsonError(at, "zero denominator");
  r.canonicalize();
  return r;
}

int int_from_json(const json& j, const std::string& at) {
  if (!j.is_number_integer()) throw JsonError(at, "expected an integer");
  long v = j.get<long>();
  if (v < -(1L << 30) || v > (1L << 30)) throw JsonError(at, "integer out of range");
  return int(v);
}

const json& field(const json& j, const char* key, const std::string& at) {
  expect_object(j, at);
  auto it = j.find(key);
  if (it == j.end()) throw JsonError(at.empty() ? "/" : at, std::string("missing field \"") + key + "\"");
  return *it;
}

json to_json(const ExtElem& a) {
  json r = json::array();
  for (const auto& [m, c] : a.terms()) r.push_back({{"coeff", to_json(c)}, {"ext", index_list(m)}});
  return r;
}

ExtElem ext_from_json(const json& j, int n, const std::string& at) {
  ExtElem a(n);
  expect_array(j, at);
  for (size_t i = 0; i < j.size(); ++i) {
    std::string p = at_index(at, i);
    a.add(index_set(field(j[i], "ext", p), n, at_key(p, "ext")), scalar_from_json(field(j[i], "coeff", p), at_key(p, "coeff")));
  }
  return a;
}

json to_json(const Poly& p) {
  json r = json::array();
  for (const auto& [d, c] : p.terms()) r.push_back({{"coeff", to_json(c)}, {"exps", d}});
  return r;
}

Poly poly_from_json(const json& j, int m, const std::string& at) {
  Poly p(m);
  if (j.is_string() || j.is_number_integer()) return Poly(m, scalar_from_json(j, at));
  expect_array(j, at);
  for (size_t i = 0; i < j.size(); ++i) {
    std::string q = at_index(at, i);
    p.add(exponents(field(j[i], "exps", q), m, at_key(q, "exps")), scalar_from_json(field(j[i], "coeff", q), at_key(q, "coeff")));
  }
  return p;
}

json to_json(const PolyMatrix& M) {
  json r = json::array();
  for (const auto& row : M) {
    json jr = json::array();
    for (const auto& p : row) jr.push_back(to_json(p));
    r.push_back(jr);
  }
  return r;
}

PolyMatrix poly_matrix_from_json(const json& j, int m, int rows, int cols, const std::string& at) {
  expect_array(j, at);
  if (int(j.size()) != rows) throw JsonError(at, "expected " + std::to_string(rows) + " rows");
  PolyMatrix M;
  for (int i = 0; i < rows; ++i) {
    std::string r = at_index(at, i);
    expect_array(j[i], r);
    if (int(j[i].size()) != cols) throw JsonError(r, "expected " + std::to_string(cols) + " columns");
    std::vector<Poly> row;
    for (int c = 0; c < cols; ++c) row.push_back(poly_from_json(j[i][c], m, at_index(r, c)));
    M.push_back(row);
  }
  return M;
}

json to_json(const QMatrix& M) {
  json r = json::array();
  for (int i = 0; i < M.rows(); ++i) {
    json row = json::array();
    for (int c = 0; c < M.cols(); ++c) row.push_back(to_json(M.at(i, c)));
    r.push_back(row);
  }
  return r;
}

QMatrix matrix_from_json(const json& j, const std::string& at) {
  expect_array(j, at);
  int rows = int(j.size()), cols = -1;
  for (int i = 0; i < rows; ++i) {
    expect_array(j[i], at_index(at, i));
    if (cols < 0) cols = int(j[i].size());
    if (int(j[i].size()) != cols) throw JsonError(at_index(at, i), "ragged matrix");
  }
  QMatrix M(rows, std::max(cols, 0));
  for (int i = 0; i < rows; ++i)
    for (int c = 0; c < cols; ++c) M.at(i, c) = scalar_from_json(j[i][c], at_index(at_index(at, i), c));
  return M;
}

json to_json(const GenImageMap& F) {
  json im = json::array();
  for (const auto& e : F.images) im.push_back(to_json(e));
  return {{"n", F.n}, {"images", im}};
}

GenImageMap images_from_json(const json& j, const std::string& at) {
  int n = dim_field(j, "n", at);
  const json& im = expect_array(field(j, "images", at), at_key(at, "images"));
  if (int(im.size()) != n) throw JsonError(at_key(at, "images"), "expected one image per generator");
  GenImageMap F{n, {}};
  for (int i = 0; i < n; ++i) F.images.push_back(ext_from_json(im[i], n, at_index(at_key(at, "images"), i)));
  return F;
}

json to_json(const SuperDerivation& D) {
  json r = to_json(D.F);
  r["parity"] = D.parity == Parity::even ? "even" : "odd";
  return r;
}

SuperDerivation superderivation_from_json(const json& j, const std::string& at) {
  const json& p = field(j, "parity", at);
  if (!p.is_string() || (p != "even" && p != "odd")) throw JsonError(at_key(at, "parity"), "expected \"even\" or \"odd\"");
  return make_superderivation(images_from_json(j, at), p == "even" ? Parity::even : Parity::odd);
}

json to_json(const LieSuperData& L) {
  json br = json::array();
  for (int i = 0; i < L.dim(); ++i)
    for (int j = 0; j < L.dim(); ++j) {
      const Vec& v = L.c[i][j];
      if (std::all_of(v.begin(), v.end(), [](const Scalar& s) { return sgn(s) == 0; })) continue;
      json cs = json::array();
      for (const auto& s : v) cs.push_back(to_json(s));
      br.push_back({{"i", i + 1}, {"j", j + 1}, {"coeffs", cs}});
    }
  return {{"even_dim", L.even_dim}, {"odd_dim", L.odd_dim}, {"brackets", br}};
}

LieSuperData lie_from_json(const json& j, const std::string& at) {
  int p = dim_field(j, "even_dim", at, 64), q = dim_field(j, "odd_dim", at, 64);
  LieSuperData L = LieSuperData::abelian(p, q);
  int d = p + q;
  std::string bat = at_key(at, "brackets");
  const json& br = j.contains("brackets") ? expect_array(j["brackets"], bat) : json::array();
  for (size_t t = 0; t < br.size(); ++t) {
    std::string e = at_index(bat, t);
    int a = int_from_json(field(br[t], "i", e), at_key(e, "i")), b = int_from_json(field(br[t], "j", e), at_key(e, "j"));
    if (a < 1 || a > d || b < 1 || b > d) throw JsonError(e, "basis index out of range");
    const json& cs = expect_array(field(br[t], "coeffs", e), at_key(e, "coeffs"));
    if (int(cs.size()) != d) throw JsonError(at_key(e, "coeffs"), "expected " + std::to_string(d) + " coordinates");
    for (int k = 0; k < d; ++k) L.c[a - 1][b - 1][k] = scalar_from_json(cs[k], at_index(at_key(e, "coeffs"), k));
  }
  return L;
}

TensorWord word_from_json(const json& j, const SuperSpace& V, const std::string& at) {
  TensorWord w;
  w.factors = int_list(field(j, "factors", at), at_key(at, "factors"));
  for (size_t i = 0; i < w.factors.size(); ++i)
    if (w.factors[i] < 1 || w.factors[i] > V.size()) throw JsonError(at_index(at_key(at, "factors"), i), "generator index out of range");
  if (j.contains("coeff")) w.coeff = scalar_from_json(j["coeff"], at_key(at, "coeff"));
  return w;
}

json to_json_supersym(const SuperSpace& V, const SuperSymElem& a) {
  json r = json::array();
  for (const auto& [key, c] : a.terms()) {
    std::vector<int> ev, od;
    for (int i = 0; i < V.even_dim; ++i)
      for (int e = 0; e < key.first[i]; ++e) ev.push_back(i + 1);
    for (int i : indices(key.second)) od.push_back(V.even_dim + i);
    r.push_back({{"coeff", to_json(c)}, {"even", ev}, {"odd", od}});
  }
  return r;
}

json to_json_superext(const SuperSpace& V, const SuperExtElem& a) {
  json r = json::array();
  for (const auto& [key, c] : a.terms()) {
    std::vector<int> ev, od;
    for (int i : indices(key.second)) ev.push_back(i);
    for (int i = 0; i < V.odd_dim; ++i)
      for (int e = 0; e < key.first[i]; ++e) od.push_back(V.even_dim + i + 1);
    r.push_back({{"coeff", to_json(c)}, {"even", ev}, {"odd", od}});
  }
  return r;
}

OddFamily family_from_json(const json& j, const std::string& at) {
  int s = dim_field(j, "s", at);
  std::string fat = at_key(at, "family");
  const json& fam = expect_array(field(j, "family", at), fat);
  OddFamily F{int(fam.size()), s, {}};
  for (size_t i = 0; i < fam.size(); ++i) {
    std::string e = at_index(fat, i);
    expect_array(fam[i], e);
    if (int(fam[i].size()) != s) throw JsonError(e, "expected one image per odd generator");
    CompElem D{s, {}};
    for (int a = 0; a < s; ++a) D.images.push_back(ext_from_json(fam[i][a], s, at_index(e, a)));
    F.D.push_back(D);
  }
  return F;
}

json to_json(const PolyDiffOp& D) {
  json terms = json::array();
  for (const auto& [alpha, M] : D.terms()) terms.push_back({{"alpha", alpha}, {"matrix", to_json(M)}});
  return {{"m", D.nvars()}, {"r_out", D.r_out()}, {"r_in", D.r_in()}, {"terms", terms}};
}

PolyDiffOp diffop_from_json(const json& j, const std::string& at) {
  int m = dim_field(j, "m", at), ro = dim_field(j, "r_out", at, 1 << 10), ri = dim_field(j, "r_in", at, 1 << 10);
  PolyDiffOp D(m, ro, ri);
  std::string tat = at_key(at, "terms");
  const json& terms = expect_array(field(j, "terms", at), tat);
  for (size_t t = 0; t < terms.size(); ++t) {
    std::string e = at_index(tat, t);
    MultiDegree alpha = exponents(field(terms[t], "alpha", e), m, at_key(e, "alpha"));
    D.add(alpha, poly_matrix_from_json(field(terms[t], "matrix", e), m, ro, ri, at_key(e, "matrix")));
  }
  return D;
}

json to_json(const SymExt& f) {
  json r = json::array();
  for (const auto& [key, c] : f.terms())
    r.push_back({{"coeff", to_json(c)}, {"exps", key.first}, {"ext", index_list(key.second)}});
  return r;
}

SymExt superfunc_from_json(const json& j, int m, int p, const std::string& at) {
  SymExt f(m, p);
  expect_array(j, at);
  for (size_t i = 0; i < j.size(); ++i) {
    std::string e = at_index(at, i);
    MultiDegree d = j[i].contains("exps") ? exponents(j[i]["exps"], m, at_key(e, "exps")) : MultiDegree(m, 0);
    Mask I = j[i].contains("ext") ? index_set(j[i]["ext"], p, at_key(e, "ext")) : 0;
    f.add(d, I, scalar_from_json(field(j[i], "coeff", e), at_key(e, "coeff")));
  }
  return f;
}

json to_json(const SuperMapData& Phi) {
  json c = json::array(), o = json::array();
  for (const auto& f : Phi.coord_images) c.push_back(to_json(f));
  for (const auto& f : Phi.odd_images) o.push_back(to_json(f));
  return {{"n", Phi.n}, {"q", Phi.q}, {"m", Phi.m}, {"p", Phi.p}, {"coord_images", c}, {"odd_images", o}};
}

SuperMapData supermap_from_json(const json& j, const std::string& at) {
  SuperMapData Phi;
  Phi.m = dim_field(j, "m", at);
  Phi.p = dim_field(j, "p", at);
  std::string cat = at_key(at, "coord_images"), oat = at_key(at, "odd_images");
  const json& c = expect_array(field(j, "coord_images", at), cat);
  const json& o = expect_array(field(j, "odd_images", at), oat);
  Phi.n = j.contains("n") ? dim_field(j, "n", at) : int(c.size());
  Phi.q = j.contains("q") ? dim_field(j, "q", at) : int(o.size());
  for (size_t i = 0; i < c.size(); ++i) Phi.coord_images.push_back(superfunc_from_json(c[i], Phi.m, Phi.p, at_index(cat, i)));
  for (size_t i = 0; i < o.size(); ++i) Phi.odd_images.push_back(superfunc_from_json(o[i], Phi.m, Phi.p, at_index(oat, i)));
  return Phi;
}

json to_json(const OddConnection& A) {
  json mats = json::array();
  for (const auto& M : A.A) mats.push_back(to_json(M));
  return {{"m", A.m}, {"n", A.n}, {"A", mats}};
}

OddConnection connection_from_json(const json& j, const std::string& at) {
  int m = dim_field(j, "m", at), n = dim_field(j, "n", at);
  OddConnection A = OddConnection::flat(m, n);
  if (!j.contains("A")) return A;
  std::string aat = at_key(at, "A");
  const json& mats = expect_array(j["A"], aat);
  if (int(mats.size()) != m) throw JsonError(aat, "expected one matrix per coordinate direction");
  for (int i = 0; i < m; ++i) A.A[i] = poly_matrix_from_json(mats[i], m, n, n, at_index(aat, i));
  return A;
}

json to_json(const SuperForm& w) {
  json r = json::array();
  for (const auto& [k, c] : w.terms()) {
    std::vector<int> dth;
    for (int i = 0; i < w.n(); ++i)
      for (int e = 0; e < k.b[i]; ++e) dth.push_back(i + 1);
    r.push_back({{"coeff", to_json(c)}, {"x", k.x}, {"dx", index_list(k.a)}, {"dth", dth}, {"th", index_list(k.c)}});
  }
  return r;
}

SuperForm superform_from_json(const json& j, int m, int n, const std::string& at) {
  SuperForm w(m, n);
  expect_array(j, at);
  for (size_t i = 0; i < j.size(); ++i) {
    std::string e = at_index(at, i);
    FormKey k{0, MultiDegree(n, 0), 0, MultiDegree(m, 0)};
    if (j[i].contains("x")) k.x = exponents(j[i]["x"], m, at_key(e, "x"));
    if (j[i].contains("dx")) k.a = index_set(j[i]["dx"], m, at_key(e, "dx"));
    if (j[i].contains("th")) k.c = index_set(j[i]["th"], n, at_key(e, "th"));
    if (j[i].contains("dth")) {
      auto dth = int_list(j[i]["dth"], at_key(e, "dth"));
      for (int g : dth) {
        if (g < 1 || g > n) throw JsonError(at_key(e, "dth"), "index out of range");
        ++k.b[g - 1];
      }
    }
    w.add(k, scalar_from_json(field(j[i], "coeff", e), at_key(e, "coeff")));
  }
  return w;
}

}  // namespace sa
