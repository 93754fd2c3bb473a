#pragma once

// Substitution ("crochet") rules for successive N-gon layers, their 2x2
// abelianization, exact layer counts and the eigenvalue closed forms.
//
// Families:
//   SingleShape  {n,4} tilings by one right-angled regular n-gon, n >= 5,
//                indexed by overall rank.
//   Triangle     (3,N) tilings, N >= 7; alphabet {X, Y}; counts start at
//                N-gon layer 2.
//   General      (M,N) tilings with M, N >= 4; alphabet {Y, Z}.

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace hob {

using Real = long double;

struct SubstitutionRules {
  std::string alphabet;
  std::map<char, std::string> rules;
};

SubstitutionRules rules_for(int m, int n);

// Simultaneous substitution applied `steps` times. CapExceeded when the word
// would grow beyond max_length.
std::string expand(const SubstitutionRules& rules, std::string_view word, int steps,
                   std::size_t max_length = 1'000'000);

using IntVec2 = std::array<std::int64_t, 2>;

struct IntMat2 {
  std::int64_t a = 0, b = 0, c = 0, d = 0;  // [[a, b], [c, d]]

  IntVec2 operator*(const IntVec2& v) const;
  IntMat2 operator*(const IntMat2& o) const;
  std::int64_t det() const;
  static IntMat2 identity() { return {1, 0, 0, 1}; }
};

// Counts of the two alphabet letters in a word.
IntVec2 letter_counts(const SubstitutionRules& rules, std::string_view word);

struct GrowthModel {
  int m = 0;
  int n = 0;
  IntMat2 a;             // abelianization, column j = letter counts of rule j
  IntVec2 init;          // type counts of layer init_layer
  int init_layer = 0;    // 2 for M = 3, 1 otherwise
  IntVec2 cone_init;     // small-cone seed
  IntVec2 mgon_weights;  // M-gons of the same rank produced per letter
};

GrowthModel growth_model(int m, int n);

// A^(k - init_layer) init. LayerOutOfRange below init_layer.
IntVec2 layer_vector(const GrowthModel& model, int k);

// sum_{i=0}^{k-2} A^i cone_init, defined for k >= 2.
IntVec2 cone_vector(const GrowthModel& model, int k);

struct ExactLayer {
  int k = 0;
  IntVec2 types{};       // (x, y) or (y, z); zero for a type-zero layer
  std::int64_t zero = 0;  // type-zero N-gons (rank-1 layer when M = 3)
  std::int64_t q = 0;    // N-gons of layer k
  std::int64_t l = 0;    // M-gons of layer k
  std::int64_t s = 0;    // N-gons in one small cone
  std::int64_t p = 0;    // N-gon jump
  std::int64_t j = 0;    // M-gon jump
};

// Exact counts for k >= 1. At k = 1 the cone sum is empty and the jumps are
// q/M and l/M + 1.
ExactLayer exact_layer(const GrowthModel& model, int k);

enum class Family { SingleShape, Triangle, General };

const char* family_name(Family f) noexcept;  // "single", "triangle", "general"

struct ClosedFormParams {
  Family family = Family::General;
  int m = 0;
  int n = 0;
  Real b = 0;   // (M-2)(N-2)-2 for General
  Real e1 = 0;  // larger root of the characteristic quadratic
  Real e2 = 0;
};

// Triangle for M = 3, General for M >= 4 (including M = N).
ClosedFormParams closed_form_params(int m, int n);
ClosedFormParams single_shape_params(int n);

// Quadratic whose roots are (e1, e2): returns (sum, product) expected.
std::array<Real, 2> characteristic_sum_product(const ClosedFormParams& params);

struct ClosedFormValues {
  Family family = Family::General;
  int m = 0;
  int n = 0;
  int k = 0;
  bool has_mgons = true;  // false for SingleShape (no l, j)
  // Integer-consistent values.
  Real q = 0, l = 0, s = 0, p = 0, j = 0;
  // The displays as written: the Triangle q/l/p/j lack the overall factor 3,
  // the General s uses the plus-sign variant.
  Real q_printed = 0, l_printed = 0, s_printed = 0, p_printed = 0, j_printed = 0;
};

// LayerOutOfRange for k < 2 (Triangle) or k < 1.
ClosedFormValues closed_forms(const ClosedFormParams& params, int k);

Real rotation_number_closed(const ClosedFormParams& params);

// Triangle family only: the 1/3 + 1/(3(1 + Phi1^2)) form.
Real rotation_number_closed_alt(const ClosedFormParams& params);

// Inverts the Triangle rotation number for the leading eigenvalue.
Real phi_from_rotation_number(int n, Real rho);

}  // namespace hob
