#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "deltaring/graded_ring.hpp"
#include "deltaring/linalg.hpp"
#include "deltaring/rewriting.hpp"

namespace deltaring {

/// w^t a^eps u^m, the normal-form monomials of the algebra below.
struct DgaMonomial {
  int t = 0;
  int eps = 0;
  int m = 0;
  friend auto operator<=>(DgaMonomial const&, DgaMonomial const&) = default;
};
using DgaElement = std::map<DgaMonomial, Scalar>;

/// A = k<a, u> / (a^2, au + ua + v) with da = u^2, du = 0 and derivations of
/// degree -n. k = F_p[w, 1/w] with |w| = unit_degree and v = w^q, or k = F_p
/// and v = 1 when 3i + n = 0. Scalars from k are central.
class DGAlgebra {
 public:
  static constexpr int kDefaultWeightBound = 16;

  /// ParityObstruction when d does not respect the relations.
  /// `unit_degree` defaults to |3i + n| and must divide it.
  static DGAlgebra build(std::int64_t p, int i, int n,
                         std::optional<int> unit_degree = {},
                         int weight_bound = kDefaultWeightBound);

  [[nodiscard]] Coeffs const& field() const noexcept { return k_; }
  [[nodiscard]] std::int64_t characteristic() const noexcept { return k_.modulus(); }
  [[nodiscard]] int u_degree() const noexcept { return i_; }
  [[nodiscard]] int suspension() const noexcept { return n_; }
  [[nodiscard]] int a_degree() const noexcept { return 2 * i_ + n_; }
  [[nodiscard]] int v_degree() const noexcept { return 3 * i_ + n_; }
  /// |w|, or 0 when k = F_p.
  [[nodiscard]] int unit_degree() const noexcept { return delta_; }
  [[nodiscard]] bool periodic() const noexcept { return delta_ != 0; }
  /// v = w^q.
  [[nodiscard]] int v_power() const noexcept { return q_; }
  [[nodiscard]] int weight_bound() const noexcept { return weight_bound_; }
  [[nodiscard]] rewrite::RewriteSystem const& rewriting() const noexcept { return rw_; }

  [[nodiscard]] int degree(DgaMonomial const& x) const;
  /// Degree of a nonzero homogeneous element; InvalidArgument otherwise.
  [[nodiscard]] int degree(DgaElement const& x) const;

  [[nodiscard]] DgaElement monomial(int t, int eps, int m, std::int64_t c = 1) const;
  [[nodiscard]] DgaElement one() const { return monomial(0, 0, 0); }
  [[nodiscard]] DgaElement u() const { return monomial(0, 0, 1); }
  [[nodiscard]] DgaElement a() const { return monomial(0, 1, 0); }
  [[nodiscard]] DgaElement v() const { return monomial(q_, 0, 0); }

  [[nodiscard]] DgaElement add(DgaElement const& x, DgaElement const& y) const;
  [[nodiscard]] DgaElement scale(Scalar c, DgaElement const& x) const;
  void add_to(DgaElement& x, DgaMonomial const& mono, Scalar c) const;

  /// Normal-form product; WeightOverflow if a u-exponent exceeds the bound.
  [[nodiscard]] DgaElement multiply(DgaElement const& x, DgaElement const& y) const;
  [[nodiscard]] DgaElement multiply_unbounded(DgaElement const& x,
                                              DgaElement const& y) const;
  /// The same product computed by the rewriting system on words.
  [[nodiscard]] DgaElement multiply_by_rewriting(DgaElement const& x,
                                                 DgaElement const& y) const;
  [[nodiscard]] DgaElement differential(DgaElement const& x) const;

  /// d(xy) - d(x) y - (-1)^{n|x|} x d(y) for homogeneous x.
  [[nodiscard]] DgaElement leibniz_defect(DgaElement const& x,
                                          DgaElement const& y) const;

  [[nodiscard]] rewrite::Poly to_poly(DgaElement const& x) const;
  [[nodiscard]] DgaElement from_poly(rewrite::Poly const& p) const;
  [[nodiscard]] std::string to_string(DgaElement const& x) const;

 private:
  DGAlgebra(Coeffs k, int i, int n, int delta, int q, int w, rewrite::RewriteSystem rw)
      : k_(k), i_(i), n_(n), delta_(delta), q_(q), weight_bound_(w), rw_(std::move(rw)) {}
  [[nodiscard]] DgaElement multiply_impl(DgaElement const& x, DgaElement const& y,
                                         int bound) const;

  Coeffs k_;
  int i_, n_, delta_, q_, weight_bound_;
  rewrite::RewriteSystem rw_;
};
using DgaHandle = std::shared_ptr<DGAlgebra const>;

/// Semifree right DG module on generators e_j of the given degrees with
/// d(e_j) = sum_k e_k c_kj, so d(e_j g) = d(e_j) g + (-1)^{n|e_j|} e_j dg.
struct DGModule {
  DgaHandle algebra;
  std::vector<int> degrees;
  /// differential[k][j] = c_kj.
  std::vector<std::vector<DgaElement>> differential;

  static DGModule free(DgaHandle alg, std::vector<int> degrees);
  [[nodiscard]] std::size_t rank() const noexcept { return degrees.size(); }
  /// Degrees of the coefficients and d^2 = 0 on generators.
  void validate() const;
};

/// Right A-linear map of degree 0: f(e_j) = sum_k e'_k f_kj.
struct DGMap {
  DGModule source, target;
  std::vector<std::vector<DgaElement>> matrix;

  [[nodiscard]] bool is_chain_map() const;
};

/// Degrees raised by j, differential scaled by (-1)^j.
DGModule shift(DGModule const& m, int j);
/// Generators of N followed by those of M[n]; D(y, x) = (dy + f x, d_{M[n]} x).
DGModule cone(DGMap const& f);
/// N -> cone(f) and cone(f) -> M[n].
DGMap cone_inclusion(DGMap const& f);
DGMap cone_projection(DGMap const& f);

/// Homology of one degree slice over F_p.
struct HomologySlice {
  int degree = 0;
  bool reliable = true;
  int dimension = 0;
  /// Ambient monomials (generator, monomial) of the slice.
  std::vector<std::pair<int, DgaMonomial>> basis;
  std::map<std::pair<int, DgaMonomial>, std::size_t> index;
  /// Cycles whose classes form a basis of the slice.
  std::vector<Vec> representatives;
  /// All boundaries in the slice.
  Span boundaries;
};

/// Truncated homology: cycles are taken among monomials of u-exponent at
/// most W - padding, boundaries from everything up to W.
class Homology {
 public:
  static constexpr int kPadding = 2;

  /// WindowTooWideForWeightBound when k = F_p, |u| != 0 and the window
  /// needs u-exponents beyond the bound.
  static Homology compute(DGModule const& m, int lo, int hi);

  [[nodiscard]] DGModule const& module() const noexcept { return m_; }
  [[nodiscard]] int lo() const noexcept { return lo_; }
  [[nodiscard]] int hi() const noexcept { return hi_; }
  [[nodiscard]] HomologySlice const& slice(int s) const;
  [[nodiscard]] int dimension(int s) const { return slice(s).dimension; }
  [[nodiscard]] bool reliable(int s) const { return slice(s).reliable; }

  /// Coordinates of the class of a cycle given in slice coordinates.
  [[nodiscard]] Vec coordinates(int s, Vec const& cycle) const;
  /// Right multiplication by u: H_s -> H_{s+|u|} (both in the window).
  [[nodiscard]] Matrix x_action(int s) const;
  /// Induced map H_s(source) -> H_s(target).
  [[nodiscard]] Matrix induced(DGMap const& f, Homology const& target, int s) const;

  /// Number of free k[x]/(x^2)-generators in degree s: dim H_s minus the
  /// rank of x into H_s.
  [[nodiscard]] int generators_in_degree(int s) const;
  /// ker x == im x in every reliable slice whose neighbours are present.
  [[nodiscard]] bool x_exact() const;
  [[nodiscard]] bool x_squared_zero() const;

 private:
  DGModule m_;
  int lo_ = 0, hi_ = -1;
  std::vector<HomologySlice> slices_;
};

/// Slice vector of an element of the module (sum over generators).
using ModuleElement = std::map<std::pair<int, DgaMonomial>, Scalar>;
ModuleElement module_differential(DGModule const& m, ModuleElement const& x);
ModuleElement apply_map(DGMap const& f, ModuleElement const& x);

/// Finite sum of shifted free modules over R = k[x]/(x^2); summand j is
/// generated in degree shifts[j].
struct ProjectiveModule {
  std::vector<int> shifts;
};
/// Entry r = c0 w^s + c1 w^s' x of degree shift_j - shift'_k.
struct ProjectiveEntry {
  std::int64_t c0 = 0;
  std::int64_t c1 = 0;
};
struct ProjectiveMap {
  ProjectiveModule source, target;
  /// entries[k][j]
  std::vector<std::vector<ProjectiveEntry>> entries;
};

/// k[x]/(x^2) as a graded ring for the parameters of the algebra.
GradedRing homology_ring(DGAlgebra const& alg);
DGModule lift_module(DgaHandle const& alg, ProjectiveModule const& p);
/// Lifts 1 -> 1, x -> u. LiftFailure names an entry of the wrong degree.
DGMap lift_map(DgaHandle const& alg, ProjectiveMap const& f);

/// X0 -f-> X1 -g-> X2 -h-> X0[n] as F_p-linear maps per degree slice.
struct Triangle {
  Coeffs coeffs;
  int n = 0;
  int lo = 0, hi = -1;
  /// dims[i][s]
  std::map<int, int> dims[3];
  std::map<int, Matrix> f, g, h;
  /// Degrees of a free basis of X2, when known.
  std::vector<int> third_term_shifts;
};

/// Lifts f to semifree DG modules, forms the cone and takes homology.
/// NotProjectiveInput when classify rejects k[x]/(x^2) for this n.
Triangle triangle_from_map(DgaHandle const& alg, ProjectiveMap const& f, int lo, int hi);
/// The same starting from a DG map.
Triangle triangle_from_dg_map(DGMap const& f, int lo, int hi);

struct ExactnessReport {
  bool passed = true;
  std::optional<int> failing_slice;
  /// "X1", "X2" or "X0[n]".
  std::string failing_position;
};
ExactnessReport verify_triangle_exact(Triangle const& t);
/// X1 -g-> X2 -h-> X0[n] -(-f[n])-> X1[n]; the window shrinks by n.
Triangle rotate(Triangle const& t);

/// Random map between free modules of rank at most max_rank with shifts in
/// [0, max(|w|, 1)).
ProjectiveMap random_projective_map(DGAlgebra const& alg, std::mt19937_64& rng,
                                    int max_rank = 3);

/// w^t a^eps u^m with t in [-2, 2] (0 without a unit), m <= max_m and a
/// nonzero coefficient.
DgaElement random_monomial(DGAlgebra const& alg, std::mt19937_64& rng, int max_m = 5);

struct DgVerifyOptions {
  std::int64_t p = 3;
  int i = 1;
  int n = 1;
  std::optional<int> unit_degree;
  int weight_bound = DGAlgebra::kDefaultWeightBound;
  int lo = -10, hi = 10;
  /// Random monomial pairs for the Leibniz and d^2 checks.
  int trials = 200;
  int triangles = 50;
  int triangle_lo = -3, triangle_hi = 3;
  int max_rank = 3;
  std::uint64_t seed = 1;
};

struct DgVerifyReport {
  DgVerifyOptions options;
  bool built = false;
  /// Set when build raised ParityObstruction.
  std::string obstruction;
  int unit_degree = 0;
  int leibniz_failures = 0;
  int d_squared_failures = 0;
  /// Free generators of H(A) over one period and the degree-0 count.
  int homology_generators = 0;
  int generators_in_degree_zero = 0;
  bool homology_reliable = false;
  bool x_exact = false;
  bool x_squared_zero = false;
  /// classify(H(A), n), only for n in {0, 1}.
  std::optional<bool> homology_ring_is_delta;
  int triangles_exact = 0;
  int rotations_exact = 0;

  [[nodiscard]] bool homology_free_rank_one() const;
  [[nodiscard]] bool passed() const;
};

/// Builds the algebra and runs the algebra, homology and triangle checks.
/// ParityObstruction is reported, other errors propagate.
DgVerifyReport dg_verify(DgVerifyOptions const& opt);
nlohmann::json to_json(DgVerifyReport const& r);

}  // namespace deltaring
