#include "graphcalc/operators.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace graphcalc {

std::string_view to_string(Mode m) {
  return m == Mode::closed ? "closed" : "dirichlet";
}

Mode parse_mode(std::string_view s) {
  if (s == "closed") return Mode::closed;
  if (s == "dirichlet") return Mode::dirichlet;
  throw InputError("mode must be 'closed' or 'dirichlet'");
}

VertexValues laplacian_apply(const WeightedGraph& g,
                             std::span<const double> f) {
  if (static_cast<int>(f.size()) != g.vertex_count()) {
    throw InputError("function size mismatch");
  }
  VertexValues out(g.vertex_count(), 0.0);
  for (const auto& e : g.edges()) {
    if (e.is_loop()) continue;
    const double flux = e.conductance() * (f[e.u] - f[e.v]);
    out[e.u] += flux;
    out[e.v] -= flux;
  }
  for (int v = 0; v < g.vertex_count(); ++v) out[v] /= g.measure(v);
  return out;
}

VertexValues divergence(const WeightedGraph& g,
                        std::span<const double> field) {
  if (static_cast<int>(field.size()) != g.edge_count()) {
    throw InputError("edge field size mismatch");
  }
  VertexValues out(g.vertex_count(), 0.0);
  for (int i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edge(i);
    if (e.is_loop()) continue;
    out[e.u] += e.a * field[i];
    out[e.v] -= e.a * field[i];
  }
  for (int v = 0; v < g.vertex_count(); ++v) out[v] /= g.measure(v);
  return out;
}

double inner_vertex(const WeightedGraph& g, std::span<const double> f,
                    std::span<const double> h) {
  double s = 0.0;
  for (int v = 0; v < g.vertex_count(); ++v) s += f[v] * h[v] * g.measure(v);
  return s;
}

SpectralDecomposition spectral_decomposition(const WeightedGraph& g,
                                             Mode mode,
                                             std::optional<int> count) {
  SpectralDecomposition out;
  out.mode = mode;
  const int n_all = g.vertex_count();
  std::vector<int> slot(n_all, -1);
  for (int v = 0; v < n_all; ++v) {
    if (mode == Mode::closed || !g.is_boundary(v)) {
      slot[v] = static_cast<int>(out.support.size());
      out.support.push_back(v);
    }
  }
  const int n = static_cast<int>(out.support.size());
  if (n == 0) {
    throw InputError("spectral decomposition needs a nonempty interior");
  }
  if (n > kMaxDenseVertices) {
    throw InputError("graph too large for the dense eigensolver");
  }

  // S = V^{1/2} M V^{-1/2}: diagonal L(v), off-diagonal -w_uv/sqrt(V_u V_v).
  Eigen::MatrixXd S = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : g.edges()) {
    if (e.is_loop()) continue;
    const double w = e.conductance();
    const int iu = slot[e.u];
    const int iv = slot[e.v];
    if (iu >= 0) S(iu, iu) += w / g.measure(e.u);
    if (iv >= 0) S(iv, iv) += w / g.measure(e.v);
    if (iu >= 0 && iv >= 0) {
      const double off = w / std::sqrt(g.measure(e.u) * g.measure(e.v));
      S(iu, iv) -= off;
      S(iv, iu) -= off;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(S);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigensolver failed to converge");
  }
  const int k = count ? std::clamp(*count, 0, n) : n;
  out.eigenvalues.reserve(k);
  out.eigenfunctions.reserve(k);
  for (int i = 0; i < k; ++i) {
    Eigen::VectorXd psi = solver.eigenvectors().col(i);
    const double scale = psi.cwiseAbs().maxCoeff();
    for (int j = 0; j < n; ++j) {
      if (std::abs(psi(j)) > 1e-10 * scale) {
        if (psi(j) < 0.0) psi = -psi;
        break;
      }
    }
    VertexValues phi(n_all, 0.0);
    for (int j = 0; j < n; ++j) {
      const int v = out.support[j];
      phi[v] = psi(j) / std::sqrt(g.measure(v));
    }
    out.eigenvalues.push_back(solver.eigenvalues()(i));
    out.eigenfunctions.push_back(std::move(phi));
  }
  return out;
}

OperatorNormReport operator_norm_report(const WeightedGraph& g) {
  OperatorNormReport r;
  r.L_sup = l_stats(g, 0).L_sup;
  if (g.interior().empty()) {
    r.sandwich_holds = true;
    return r;
  }
  const auto dec = spectral_decomposition(g, Mode::dirichlet);
  r.norm = dec.eigenvalues.back();
  const double slack = 1e-9 * (1.0 + r.L_sup);
  r.sandwich_holds =
      r.L_sup <= r.norm + slack && r.norm <= 2.0 * r.L_sup + slack;
  return r;
}

}  // namespace graphcalc
