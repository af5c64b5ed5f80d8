#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace sa {

using Scalar = mpq_class;

struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotInvertible : DomainError {
  using DomainError::DomainError;
};
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

std::string to_string(const Scalar& q);
Scalar parse_scalar(const std::string& s);

enum class Parity : std::uint8_t { even = 0, odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return Parity(std::uint8_t(a) ^ std::uint8_t(b));
}
inline Parity parity_of(long deg) { return (deg & 1) ? Parity::odd : Parity::even; }
inline int as_int(Parity p) { return int(p); }
inline int sign_pow(long e) { return (e & 1) ? -1 : 1; }
const char* to_string(Parity p);
Parity parse_parity(const std::string& s);

// Index sets over 1-based indices; index i lives in bit i-1.
using Mask = std::uint64_t;
constexpr int max_generators = 62;

inline int card(Mask m) { return __builtin_popcountll(m); }
inline Mask single(int i) { return Mask(1) << (i - 1); }
inline bool has(Mask m, int i) { return (m >> (i - 1)) & 1u; }
inline Mask full_mask(int n) { return n == 0 ? 0 : (~Mask(0)) >> (64 - n); }
// number of elements of m strictly below index i
inline int count_below(Mask m, int i) { return card(m & (single(i) - 1)); }

std::vector<int> indices(Mask m);
Mask mask_of(const std::vector<int>& idx, int n);
// sign of sorting the concatenation (a, b); 0 when a and b overlap
int merge_sign(Mask a, Mask b);
std::vector<Mask> subsets_of_size(int n, int k);
void check_dim(int n);

using MultiDegree = std::vector<int>;

int total_degree(const MultiDegree& d);
// graded lexicographic: x1^k first
std::vector<MultiDegree> multidegrees(int nvars, int deg);
std::vector<MultiDegree> multidegrees_upto(int nvars, int deg);
MultiDegree unit_degree(int nvars, int i);  // 1-based variable index
mpz_class factorial(int k);
mpz_class multi_factorial(const MultiDegree& d);
mpz_class binomial(long n, long k);

struct Permutation {
  std::vector<int> img;  // img[i-1] = sigma(i)
  int size() const { return int(img.size()); }
  int operator()(int i) const { return img[i - 1]; }
  static Permutation identity(int k);
  static Permutation transposition(int k, int i, int j);
  bool operator==(const Permutation&) const = default;
};

void validate(const Permutation& s);
Permutation compose(const Permutation& s, const Permutation& t);  // s after t
Permutation inverse(const Permutation& s);
std::vector<Permutation> all_permutations(int k);

int signature(const Permutation& s);
// sign of sorting (s(a_1),...,s(a_r)) for a_1 < ... < a_r in A
int relative_signature(const Permutation& s, const std::vector<int>& A);

struct ShuffleSplit {
  Permutation tau;
  Permutation shuffle;
};
ShuffleSplit shuffle_representative(const Permutation& sigma, const std::vector<int>& B,
                                    const std::vector<int>& C);

// deterministic seed splitting
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t sub_seed(std::uint64_t seed, const std::string& label, std::uint64_t index);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  int uniform(int lo, int hi);  // inclusive
  bool coin(double p = 0.5);
  Scalar small_rational(int num_range = 3, int den_max = 2);
  Scalar small_integer(int range = 3) { return Scalar(uniform(-range, range)); }
  Permutation permutation(int k);
  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace sa
