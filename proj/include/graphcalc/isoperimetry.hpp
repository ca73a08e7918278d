#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "graphcalc/fnspace.hpp"
#include "graphcalc/graph.hpp"
#include "graphcalc/operators.hpp"

namespace graphcalc {

/// open: i = A / V(S)^{1/nu'}; tilde: A * min(V(S), V(S^c))^{1/nu - 1};
/// tilde_prime: A * (V(S)^{1-nu} + V(S^c)^{1-nu})^{1/nu}.
enum class IsoVariant { open, tilde, tilde_prime };

std::string_view to_string(IsoVariant v);
IsoVariant parse_iso_variant(std::string_view s);

/// A connected, vertex-determined set of interior vertices.
struct AdmissibleSet {
  std::vector<int> vertices;  // sorted
  double area = 0.0;          // sum of a_e over edges leaving the set
  double vmass = 0.0;
};

struct IsoReport {
  double nu = 0.0;
  IsoVariant variant = IsoVariant::open;
  /// +inf when no admissible set exists.
  double value = kInfinity;
  std::optional<AdmissibleSet> witness;
  long long sets_examined = 0;
};

struct EnumerationLimits {
  int max_vertices = 22;
  bool force = false;
};

/// Raised when the enumeration would exceed the configured vertex cap.
class CapExceeded : public InputError {
 public:
  using InputError::InputError;
};

/// The isoperimetric functional of one set. `total` is V(G).
double iso_functional(IsoVariant variant, double nu, double area, double vmass,
                      double total);

/// Calls visit(members, area, vmass) once for every connected subset of the
/// `allowed` vertices. Members are in discovery order.
using SubsetVisitor =
    std::function<void(std::span<const int>, double area, double vmass)>;
void for_each_connected_subset(const WeightedGraph& g,
                               std::span<const char> allowed,
                               const SubsetVisitor& visit);

/// Exact constant by enumerating connected vertex sets. Tilde variants need a
/// closed graph and only consider proper subsets. Ties break on the
/// lexicographic order of the sorted vertex-id lists.
IsoReport iso_constant(const WeightedGraph& g, double nu, IsoVariant variant,
                       const EnumerationLimits& limits = {});

struct Magnification {
  double c = kInfinity;
  std::vector<int> witness;  // sorted
  double gamma_mass = 0.0;
  double set_mass = 0.0;
};

/// Gamma(A): vertices joined by an edge to some vertex of A.
std::vector<int> neighbourhood(const WeightedGraph& g, std::span<const int> A);

/// c = min V(Gamma(A))/V(A) - 1 over every nonempty A of interior vertices
/// (connected or not); closed mode restricts to V(A) <= V(G)/2.
Magnification magnification(const WeightedGraph& g, Mode mode,
                            const EnumerationLimits& limits = {});

/// ||grad f||_1 / ||f||_{nu'}. Throws InputError when f vanishes.
double sobolev_quotient(const WeightedGraph& g, std::span<const double> f,
                        double nu);

inline constexpr double kSubdivisionMeasure = 1e-300;

struct CharacteristicApprox {
  WeightedGraph graph;
  VertexValues f;
};

/// Subdivides every edge leaving S at distance eps from its S endpoint and
/// returns the ramp function: 1 on S, 0 elsewhere, linear on the eps-segments.
/// New vertices carry measure kSubdivisionMeasure.
CharacteristicApprox characteristic_approx(const WeightedGraph& g,
                                           std::span<const int> S, double eps);

}  // namespace graphcalc
