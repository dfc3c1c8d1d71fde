#pragma once

// Acts, credal sets and their lower/upper expectation operators.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "budgeted/simplex.hpp"

namespace budgeted {

inline constexpr double kPmfTol = 1e-9;
inline constexpr std::size_t kVertexEnumMaxStates = 12;

using Pmf = std::vector<double>;

class StateSpace {
 public:
  explicit StateSpace(std::vector<std::string> labels);
  // States named w1..wn.
  static StateSpace anonymous(std::size_t size);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  std::vector<std::string> labels_;
};

struct Act {
  std::string name;
  std::vector<double> payoffs;  // one utility per state
};

// Throws Error(kMalformedInput) unless every act has `n_states` finite payoffs.
void validate_acts(std::span<const Act> acts, std::size_t n_states);

enum class Relation { kLessEqual, kGreaterEqual, kEqual };

struct LinearConstraint {
  std::vector<double> coeffs;
  Relation relation = Relation::kLessEqual;
  double rhs = 0.0;
};

// Lower/upper probability bound for one binary label being present.
struct LabelInterval {
  double lower = 0.0;
  double upper = 1.0;
};

class CredalSet {
 public:
  enum class Form { kVertices, kConstraints };

  // Each vertex must be nonnegative and sum to one within kPmfTol; vertices
  // inside the tolerance are clipped and renormalized.
  static CredalSet from_vertices(std::vector<Pmf> vertices);

  // The simplex constraints (sum p = 1, p >= 0) are implicit. Emptiness is
  // detected here by a phase-one LP and raised as Error(kInfeasible).
  static CredalSet from_constraints(std::size_t dimension,
                                    std::vector<LinearConstraint> constraints);

  Form form() const { return form_; }
  std::size_t dimension() const { return dimension_; }

  // Vertex form only (empty otherwise).
  const std::vector<Pmf>& vertices() const { return vertices_; }
  // Constraint form only (empty otherwise). As given, not normalized.
  const std::vector<LinearConstraint>& constraints() const { return constraints_; }

  // Vertex form only: vertices stored state-major for the SIMD kernels.
  std::span<const double> vertices_state_major() const { return vertices_t_; }

  // Constraint rows rewritten as <= rows, including p >= 0 as -p_s <= 0 when
  // `with_nonnegativity` is set.
  std::vector<lp::Row> normalized_rows(bool with_nonnegativity) const;

  double upper_expectation(std::span<const double> gamble) const;

 private:
  CredalSet() = default;

  Form form_ = Form::kVertices;
  std::size_t dimension_ = 0;
  std::vector<Pmf> vertices_;
  std::vector<double> vertices_t_;
  std::vector<LinearConstraint> constraints_;
  std::optional<lp::FeasibleRegion> region_;
};

// max over the credal set of E_p(gamble).
double upper_expectation(const CredalSet& credal, std::span<const double> gamble);

// Defined as -upper_expectation(-gamble).
double lower_expectation(const CredalSet& credal, std::span<const double> gamble);

// Extreme points of the credal set. Constraint form is enumerated through all
// basic solutions (|states| <= 12); vertex form returns the stored list.
std::vector<Pmf> vertices_of(const CredalSet& credal);

// Joint pmfs over {0,1}^m built from every combination of label-wise bounds
// under independence. States are bit vectors with label 1 as the most
// significant bit, and vertices run with the last label's bound varying
// fastest, lower bound first.
CredalSet product_of_intervals(std::span<const LabelInterval> labels);

}  // namespace budgeted
