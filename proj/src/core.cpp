#include "superalg/core.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace sa {

std::string to_string(const Scalar& x) {
  Scalar q = x;
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Scalar parse_scalar(const std::string& s) {
  if (s.empty()) throw DomainError("empty scalar");
  for (char c : s)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/' || c == '+'))
      throw DomainError("bad scalar '" + s + "'");
  Scalar q;
  std::string t = s[0] == '+' ? s.substr(1) : s;
  if (q.set_str(t, 10) != 0) throw DomainError("bad scalar '" + s + "'");
  if (q.get_den() == 0) throw DomainError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

const char* to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

Parity parse_parity(const std::string& s) {
  if (s == "even") return Parity::even;
  if (s == "odd") return Parity::odd;
  throw DomainError("bad parity '" + s + "'");
}

std::vector<int> indices(Mask m) {
  std::vector<int> out;
  while (m) {
    int b = __builtin_ctzll(m);
    out.push_back(b + 1);
    m &= m - 1;
  }
  return out;
}

void check_dim(int n) {
  if (n < 0 || n > max_generators) throw DomainError("dimension out of range [0,62]");
}

Mask mask_of(const std::vector<int>& idx, int n) {
  Mask m = 0;
  int prev = 0;
  for (int i : idx) {
    if (i < 1 || i > n) throw DomainError("index " + std::to_string(i) + " outside [1," + std::to_string(n) + "]");
    if (i <= prev) throw DomainError("index list not strictly increasing");
    prev = i;
    m |= single(i);
  }
  return m;
}

int merge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  long inv = 0;
  for (Mask t = b; t; t &= t - 1) {
    int j = __builtin_ctzll(t);
    inv += card(a >> (j + 1));
  }
  return sign_pow(inv);
}

std::vector<Mask> subsets_of_size(int n, int k) {
  std::vector<Mask> out;
  if (k < 0 || k > n) return out;
  if (k == 0) return {0};
  Mask m = full_mask(k);
  Mask limit = Mask(1) << n;
  while (m < limit) {
    out.push_back(m);
    Mask c = m & -m;
    Mask r = m + c;
    m = (((r ^ m) >> 2) / c) | r;
  }
  return out;
}

int total_degree(const MultiDegree& d) { return std::accumulate(d.begin(), d.end(), 0); }

static void gen_degrees(int nvars, int i, int left, MultiDegree& cur, std::vector<MultiDegree>& out) {
  if (i == nvars - 1) {
    cur[i] = left;
    out.push_back(cur);
    return;
  }
  for (int e = left; e >= 0; --e) {
    cur[i] = e;
    gen_degrees(nvars, i + 1, left - e, cur, out);
  }
}

std::vector<MultiDegree> multidegrees(int nvars, int deg) {
  std::vector<MultiDegree> out;
  if (deg < 0) return out;
  if (nvars == 0) {
    if (deg == 0) out.emplace_back();
    return out;
  }
  MultiDegree cur(nvars, 0);
  gen_degrees(nvars, 0, deg, cur, out);
  return out;
}

std::vector<MultiDegree> multidegrees_upto(int nvars, int deg) {
  std::vector<MultiDegree> out;
  for (int d = 0; d <= deg; ++d) {
    auto part = multidegrees(nvars, d);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

MultiDegree unit_degree(int nvars, int i) {
  MultiDegree d(nvars, 0);
  d[i - 1] = 1;
  return d;
}

mpz_class factorial(int k) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

mpz_class multi_factorial(const MultiDegree& d) {
  mpz_class r = 1;
  for (int e : d) r *= factorial(e);
  return r;
}

mpz_class binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Permutation Permutation::identity(int k) {
  Permutation p;
  p.img.resize(k);
  std::iota(p.img.begin(), p.img.end(), 1);
  return p;
}

Permutation Permutation::transposition(int k, int i, int j) {
  Permutation p = identity(k);
  std::swap(p.img[i - 1], p.img[j - 1]);
  return p;
}

void validate(const Permutation& s) {
  std::vector<char> seen(s.size() + 1, 0);
  for (int v : s.img) {
    if (v < 1 || v > s.size() || seen[v]) throw DomainError("not a permutation");
    seen[v] = 1;
  }
}

Permutation compose(const Permutation& s, const Permutation& t) {
  if (s.size() != t.size()) throw DomainError("permutation size mismatch");
  Permutation r;
  r.img.resize(t.size());
  for (int i = 1; i <= t.size(); ++i) r.img[i - 1] = s(t(i));
  return r;
}

Permutation inverse(const Permutation& s) {
  Permutation r;
  r.img.resize(s.size());
  for (int i = 1; i <= s.size(); ++i) r.img[s(i) - 1] = i;
  return r;
}

std::vector<Permutation> all_permutations(int k) {
  std::vector<Permutation> out;
  Permutation p = Permutation::identity(k);
  do out.push_back(p);
  while (std::next_permutation(p.img.begin(), p.img.end()));
  return out;
}

static int sequence_sign(const std::vector<int>& seq) {
  long inv = 0;
  for (size_t i = 0; i < seq.size(); ++i)
    for (size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] > seq[j]) ++inv;
  return sign_pow(inv);
}

int signature(const Permutation& s) {
  validate(s);
  return sequence_sign(s.img);
}

int relative_signature(const Permutation& s, const std::vector<int>& A) {
  validate(s);
  std::vector<int> a = A;
  std::sort(a.begin(), a.end());
  std::vector<int> seq;
  for (int i : a) {
    if (i < 1 || i > s.size()) throw DomainError("relative_signature: index outside {1..k}");
    seq.push_back(s(i));
  }
  return sequence_sign(seq);
}

ShuffleSplit shuffle_representative(const Permutation& sigma, const std::vector<int>& B,
                                    const std::vector<int>& C) {
  validate(sigma);
  int k = sigma.size();
  std::vector<int> owner(k + 1, 0);
  for (int b : B) {
    if (b < 1 || b > k || owner[b]) throw DomainError("B, C not a partition");
    owner[b] = 1;
  }
  for (int c : C) {
    if (c < 1 || c > k || owner[c]) throw DomainError("B, C not a partition");
    owner[c] = 2;
  }
  for (int i = 1; i <= k; ++i)
    if (!owner[i]) throw DomainError("B, C not a partition");
  Permutation tau = Permutation::identity(k);
  for (const auto* block : {&B, &C}) {
    std::vector<int> pos = *block;
    std::sort(pos.begin(), pos.end());
    std::vector<int> order(pos.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) { return sigma(pos[x]) < sigma(pos[y]); });
    // pos[order[r]] has the r-th smallest image; send it to pos[r]
    for (size_t r = 0; r < pos.size(); ++r) tau.img[pos[order[r]] - 1] = pos[r];
  }
  return {tau, compose(sigma, inverse(tau))};
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t sub_seed(std::uint64_t seed, const std::string& label, std::uint64_t index) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : label) h = (h ^ c) * 1099511628211ULL;
  return splitmix64(splitmix64(seed ^ h) + index);
}

int Rng::uniform(int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  return d(gen_);
}

bool Rng::coin(double p) {
  std::bernoulli_distribution d(p);
  return d(gen_);
}

Scalar Rng::small_rational(int num_range, int den_max) {
  Scalar q(uniform(-num_range, num_range), uniform(1, den_max));
  q.canonicalize();
  return q;
}

Permutation Rng::permutation(int k) {
  Permutation p = Permutation::identity(k);
  std::shuffle(p.img.begin(), p.img.end(), gen_);
  return p;
}

}  // namespace sa
