#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "prcomb/ideal.hpp"
#include "prcomb/pr_ops.hpp"

namespace prcomb {

// ---------------------------------------------------------------------------
// Witness maps phi : Lambda1 -> Lambda2  (claiming rho2 <=_K rho1)
// ---------------------------------------------------------------------------

enum class MapKind : std::uint8_t {
  Identity,
  PairDifference,  // packed {n,k} -> n-k
  Inject0,         // x -> (x,0) into a sum ground
  Inject1,         // x -> (x,1)
  Project0,        // Cantor code (x,y) -> x
  Project1,        // (x,y) -> y
  ColumnEmbed,     // n -> (c,n) in omega^2
  Table,           // finite override, identity elsewhere
};

struct WitnessMap {
  MapKind kind = MapKind::Identity;
  Ground from = Ground::omega();  // Lambda1
  Ground to = Ground::omega();    // Lambda2
  std::uint64_t param = 0;        // ColumnEmbed column
  std::map<std::uint64_t, std::uint64_t> table;

  std::uint64_t apply(std::uint64_t code) const;
  /// Elementwise image of a window, truncated below out_bound.
  Window image(const Window& w, std::uint64_t out_bound) const;
  std::string name() const;

  static WitnessMap identity(Ground g) { return {MapKind::Identity, g, g, 0, {}}; }
  static WitnessMap pair_difference() {
    return {MapKind::PairDifference, Ground::pairs(), Ground::omega(), 0, {}};
  }
  static WitnessMap inject(unsigned side, Ground component, Ground sum) {
    return {side == 0 ? MapKind::Inject0 : MapKind::Inject1, component, sum, 0, {}};
  }
  static WitnessMap project(unsigned side, Ground prod, Ground component) {
    return {side == 0 ? MapKind::Project0 : MapKind::Project1, prod, component, 0, {}};
  }
  static WitnessMap column_embed(std::uint64_t c) {
    return {MapKind::ColumnEmbed, Ground::omega(), Ground::grid2(), c, {}};
  }
};

/// Symbolic image phi[A] when the map/expression shapes allow one.
std::optional<ExprPtr> symbolic_image(const WitnessMap& phi, const ExprPtr& a);

// ---------------------------------------------------------------------------
// The two theorem witnesses, verified on windows
// ---------------------------------------------------------------------------

struct TrimCheck {
  std::uint64_t trim = 0;       // |K|, the number of removed leading elements
  std::uint64_t l_bound = 0;    // L = [0, l_bound] (delta<=fs rule)
  std::uint64_t lhs_count = 0;  // elements compared
  bool ok = false;
};

struct DeltaFsReport {
  ExprPtr b;  // the partial-sums generator
  std::vector<TrimCheck> checks;
  bool pass = false;
};

/// Delta <=_K FS via the identity map: B = PartialSums(A), and for K = the
/// first k elements of A, L = [0, a_0+...+a_{k-1 or 0}]. Verifies
/// Delta(B\L) inside FS(A\K) on the window; a failure is an internal bug.
DeltaFsReport witness_delta_le_fs(const SetExpr& a, std::uint64_t cap, unsigned trims = 5);

struct DeltaRReport {
  std::vector<TrimCheck> checks;
  bool pass = false;
};

/// Delta <=_K r via phi({n,k}) = n-k: exact window equality
/// Delta(A\K) == phi[[A\K]^2] for each tested trim.
DeltaRReport witness_delta_le_r(const SetExpr& a, std::uint64_t cap, unsigned trims = 5);

struct DiagonalReport {
  std::vector<std::uint64_t> picks;  // a_n in rho(F \ first n of Omega)
  bool pass = false;
};

/// rho_Fin <=_K rho: picks a one-to-one diagonal a_n from shrinking images
/// and re-verifies the trim condition at every level.
DiagonalReport witness_rho_min(const PRDescriptor& rho, const SetExpr& f, std::uint64_t count,
                               std::uint64_t cap);

// ---------------------------------------------------------------------------
// Generic witness checking
// ---------------------------------------------------------------------------

enum class CheckStatus : std::uint8_t { Consistent, Refuted, Inconclusive };

struct SampleCheck {
  std::string f1;
  CheckStatus status = CheckStatus::Inconclusive;
  std::string detail;
  std::uint64_t refuting_trim = 0;
};

struct WitnessCheckReport {
  CheckStatus status = CheckStatus::Inconclusive;
  std::vector<SampleCheck> samples;
  std::string note;  // always states that NLE is never established by a run
};

/// The four-quantifier condition at window scale: for each sampled F1 and
/// each prefix trim K1, searches a candidate-library F2 and trim K2 with
/// rho2(F2\K2) inside phi[rho1(F1\K1)]. Refuted only on a certified finite
/// obstruction (e.g. a summable-thin image for an ideal-type rho2).
WitnessCheckReport check_rho_witness(const WitnessMap& phi, const PRDescriptor& rho2,
                                     const PRDescriptor& rho1,
                                     const std::vector<ExprPtr>& f1_samples,
                                     const Budget& budget, unsigned trims = 3);

/// Ideal-level check: phi[A] must stay target-positive for source-positive
/// samples. Refuted carries the sample whose image earns an IN certificate.
WitnessCheckReport check_ideal_witness(const WitnessMap& phi, const IdealId& target,
                                       const IdealId& source,
                                       const std::vector<ExprPtr>& samples,
                                       const Budget& budget);

// ---------------------------------------------------------------------------
// Relation matrix
// ---------------------------------------------------------------------------

enum class RelStatus : std::uint8_t { LE, NLE, OPEN };
enum class VerifyMode : std::uint8_t { WitnessVerified, Asserted, Open };

struct RelationEdge {
  std::string lhs, rhs;  // lhs <=_K rhs (status LE), or the asserted failure
  RelStatus status = RelStatus::OPEN;
  std::string provenance;
  VerifyMode mode = VerifyMode::Asserted;
  bool rho_level = false;
};

struct RelationMatrix {
  std::vector<std::string> rho_nodes, ideal_nodes;
  std::vector<RelationEdge> edges;

  /// The curated matrix; throws VerificationFailed ("consistency violation")
  /// at load when the LE closure meets an NLE edge.
  static RelationMatrix curated();

  const RelationEdge* query(const std::string& lhs, const std::string& rhs,
                            bool rho_level) const;
  std::string to_dot() const;
};

// ---------------------------------------------------------------------------
// Compound constructors with attached witnesses
// ---------------------------------------------------------------------------

struct CompoundWitness {
  PRDescriptor descriptor;
  WitnessMap phi0, phi1;  // injections (oplus) or projections (product)
};

CompoundWitness oplus_rho(const PRDescriptor& rho0, const PRDescriptor& rho1);
CompoundWitness product_rho(const PRDescriptor& rho0, const PRDescriptor& rho1);

/// Window verification of the attached injection/projection witnesses.
bool verify_compound_witness(const CompoundWitness& cw, unsigned side, const ExprPtr& f_component,
                             const ExprPtr& f_other, std::uint64_t cap, unsigned trims = 2);

}  // namespace prcomb
