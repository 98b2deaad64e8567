#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <vector>

#include "deltaring/graded_ring.hpp"
#include "deltaring/linalg.hpp"
#include "deltaring/ring_core.hpp"

namespace deltaring {

/// A finite ungraded ring with the data module computations keep reusing.
struct ModuleRing {
  GradedRing ring;
  std::size_t rank = 0;
  /// Left multiplication by each basis element on R_0.
  std::vector<Matrix> basis_action;
  bool local = false;
  /// Generators of the maximal ideal (local rings only).
  std::vector<RingElement> maximal_generators;
  /// Generator of the maximal ideal when it is principal.
  std::optional<RingElement> uniformizer;
  /// Length of the residue field over the prime ring (local rings only).
  int residue_degree = 0;
  int ring_length = 0;
  /// Local with a one-dimensional socle, i.e. quasi-Frobenius.
  bool simple_socle = false;

  static std::shared_ptr<ModuleRing const> make(GradedRing const& r,
                                                EnumerationLimits lim = {});
  /// Left multiplication by x, assembled from basis_action.
  [[nodiscard]] Matrix left_action(RingElement const& x) const;
};
using RingHandle = std::shared_ptr<ModuleRing const>;

struct ModuleLimits {
  /// Largest module cardinality for brute-force isomorphism search.
  std::uint64_t max_module_size = 4096;
  /// Largest Hom set enumerated by the brute-force search.
  std::uint64_t max_hom_size = std::uint64_t{1} << 20;
};

/// M = R^g / N. Elements live in the ambient (coefficients)^(g*rank), the
/// i-th block of rank coordinates holding the R-coordinate of generator i.
class FiniteModule {
 public:
  /// N is the R-submodule generated by the given relation vectors, each a
  /// length-g list of ring elements.
  static FiniteModule from_relations(
      RingHandle r, int generators,
      std::vector<std::vector<RingElement>> const& relations);
  /// N given directly as an additive span; it must be an R-submodule.
  static FiniteModule from_span(RingHandle r, int generators, Span relations);
  static FiniteModule free(RingHandle r, int generators);
  /// R / (gens).
  static FiniteModule cyclic(RingHandle r, std::vector<RingElement> const& ideal_gens);

  [[nodiscard]] RingHandle const& ring() const noexcept { return r_; }
  [[nodiscard]] Coeffs const& coeffs() const { return r_->ring.coeffs(); }
  [[nodiscard]] int generators() const noexcept { return g_; }
  [[nodiscard]] std::size_t ambient_dim() const noexcept {
    return static_cast<std::size_t>(g_) * r_->rank;
  }
  [[nodiscard]] Span const& relations() const noexcept { return n_; }
  /// Relation vectors (one per Howell row of N) as ring-element rows.
  [[nodiscard]] std::vector<std::vector<RingElement>> relation_rows() const;

  [[nodiscard]] Order order() const;
  [[nodiscard]] std::uint64_t cardinality() const;
  [[nodiscard]] int length() const;
  [[nodiscard]] bool is_zero() const { return length() == 0; }

  [[nodiscard]] Vec generator(int i) const;
  [[nodiscard]] Vec zero() const { return zero_vec(coeffs(), ambient_dim()); }
  [[nodiscard]] Vec reduce(Vec const& v) const { return n_.reduce(v); }
  [[nodiscard]] bool equal(Vec const& a, Vec const& b) const;
  /// x * v for a ring element x.
  [[nodiscard]] Vec act(RingElement const& x, Vec const& v) const;
  /// Block-diagonal matrix of multiplication by x on the ambient.
  [[nodiscard]] Matrix action_matrix(RingElement const& x) const;
  /// R-span of the vectors together with N.
  [[nodiscard]] Span r_span(std::vector<Vec> const& vs) const;
  /// An element as a list of g ring elements.
  [[nodiscard]] std::vector<RingElement> to_ring_row(Vec const& v) const;
  [[nodiscard]] Vec from_ring_row(std::vector<RingElement> const& row) const;

 private:
  FiniteModule(RingHandle r, int g, Span n)
      : r_(std::move(r)), g_(g), n_(std::move(n)) {}
  RingHandle r_;
  int g_ = 0;
  Span n_;
};

/// An R-linear map, stored as the images of the source generators
/// (ambient vectors of the target).
struct ModuleMap {
  FiniteModule source;
  FiniteModule target;
  std::vector<Vec> images;

  /// Checks that relations map into relations (IllFormedMap otherwise).
  static ModuleMap make(FiniteModule source, FiniteModule target,
                        std::vector<Vec> images);
  static ModuleMap zero(FiniteModule const& source, FiniteModule const& target);
  static ModuleMap identity(FiniteModule const& m);

  /// The underlying additive map between ambients.
  [[nodiscard]] Matrix linear() const;
  [[nodiscard]] Vec apply(Vec const& v) const;
  [[nodiscard]] bool is_zero() const;
};

ModuleMap compose(ModuleMap const& g, ModuleMap const& f);
ModuleMap add(ModuleMap const& f, ModuleMap const& g);
ModuleMap scale(RingElement const& c, ModuleMap const& f);
bool maps_equal(ModuleMap const& f, ModuleMap const& g);

struct SubmoduleResult {
  FiniteModule module;
  ModuleMap inclusion;
};
struct QuotientResult {
  FiniteModule module;
  ModuleMap projection;
};

/// The submodule of M whose ambient span (containing N) is S.
SubmoduleResult submodule(FiniteModule const& m, Span const& s);
QuotientResult quotient(FiniteModule const& m, Span const& s);

SubmoduleResult kernel(ModuleMap const& f);
SubmoduleResult image(ModuleMap const& f);
QuotientResult cokernel(ModuleMap const& f);

struct DirectSum {
  FiniteModule module;
  ModuleMap inject_first, inject_second, project_first, project_second;
};
DirectSum direct_sum(FiniteModule const& a, FiniteModule const& b);

/// Minimal generators (local rings): lifts of a basis of M / mM.
std::vector<Vec> minimal_generators(FiniteModule const& m);
/// The cover R^{g0} -> M; g0 minimal.
ModuleMap projective_cover(FiniteModule const& m);
/// Omega M, the kernel of the projective cover, with its inclusion.
SubmoduleResult heller_shift_with_inclusion(FiniteModule const& m);
FiniteModule heller_shift(FiniteModule const& m);
/// soc M = {v : m v = 0} as an ambient span.
Span module_socle(FiniteModule const& m);
bool is_projective(FiniteModule const& m, EnumerationLimits lim = {});
/// Number of free summands in a Krull-Schmidt decomposition (local QF).
int free_summand_count(FiniteModule const& m);

bool iso_test(FiniteModule const& m, FiniteModule const& n, ModuleLimits lim = {});
/// Isomorphic after discarding free summands (local QF rings).
bool stably_isomorphic(FiniteModule const& m, FiniteModule const& n,
                       ModuleLimits lim = {});

struct HomSpace {
  FiniteModule source, target;
  /// Flattened generator images (source generator major) of all R-maps;
  /// contains `zero_maps`.
  Span maps;
  /// Flattened images that define the zero map.
  Span zero_maps;

  [[nodiscard]] int length() const { return maps.length() - zero_maps.length(); }
  [[nodiscard]] ModuleMap to_map(Vec const& flat) const;
  [[nodiscard]] Vec flatten(ModuleMap const& f) const;
};
HomSpace hom(FiniteModule const& m, FiniteModule const& n);

struct StableHom {
  /// Length of the stable Hom group divided by the residue degree.
  int dimension = 0;
  int length = 0;
  /// Maps whose classes generate the stable Hom group.
  std::vector<ModuleMap> basis;
};
/// Hom modulo maps factoring through a projective, computed as maps
/// factoring through the projective cover of the target.
StableHom stable_hom(FiniteModule const& m, FiniteModule const& n);
bool factors_through_projective(ModuleMap const& f);
/// Length of the subgroup of the stable Hom group M -> N generated by the
/// classes of the given maps.
int stable_span_length(FiniteModule const& m, FiniteModule const& n,
                       std::vector<ModuleMap> const& maps);

/// An embedding M -> R^s with s = dim soc M (local QF rings).
ModuleMap injective_envelope(FiniteModule const& m);
/// Omega^{-1} M = coker of the injective envelope, with the projection.
QuotientResult cosyzygy_with_projection(FiniteModule const& m);
FiniteModule cosyzygy(FiniteModule const& m);

/// Lifts f along covers and restricts: Omega f : Omega M -> Omega N.
ModuleMap heller_shift_map(ModuleMap const& f);
/// Extends f along envelopes and passes to cokernels: Omega^{-1} f.
ModuleMap cosyzygy_map(ModuleMap const& f);

struct HellerReport {
  bool holds = true;
  /// Index of the first sample with Omega^3 M not stably isomorphic to M.
  std::optional<std::size_t> failing_sample;
};
HellerReport heller_cube_check(std::vector<FiniteModule> const& samples,
                               ModuleLimits lim = {});

/// A random finitely presented module with up to max_generators
/// generators and max_relations relations.
FiniteModule random_module(RingHandle const& r, std::mt19937_64& rng,
                           int max_generators = 3, int max_relations = 3);

}  // namespace deltaring
