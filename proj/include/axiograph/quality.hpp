#pragma once

#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "axiograph/graph.hpp"

namespace axiograph {

// One descriptor for every quality function in the library. All of them
// except coco are sums of independent per-cluster contributions; the
// contribution formulas live in ClusterTerm below.
//
// Text grammar (CLI and config):
//   modularity | fixed:M | adaptive:M,GAMMA | cpm:GAMMA | rb:GAMMA
//   | ncut | withinsum | coco
// where ncut is an alias for adaptive:0,1.
enum class QualityKind {
  modularity,    // w_c/v_V - (v_c/v_V)^2
  fixed_scale,   // w_c/M - (v_c/M)^2,           M > 0
  adaptive_scale,// w_c/(M+y*v_c) - (v_c/(M+y*v_c))^2
  cpm,           // w_c - y*n_c^2                (n_c = cluster node mass)
  rb,            // w_c - y*v_c^2/v_V
  within_sum,    // w_c
  coco           // 1 if the clustering equals the connected components
};

struct QualitySpec {
  QualityKind kind = QualityKind::modularity;
  double m = 0.0;
  double gamma = 0.0;
  double gamma_rb = 1.0;

  static QualitySpec modularity() { return {QualityKind::modularity, 0, 0, 1}; }
  static QualitySpec within_sum() { return {QualityKind::within_sum, 0, 0, 1}; }
  static QualitySpec coco() { return {QualityKind::coco, 0, 0, 1}; }

  static QualitySpec fixed(double m) {
    if (!(m > 0.0) || !std::isfinite(m))
      throw InputError("fixed scale requires M > 0");
    return {QualityKind::fixed_scale, m, 0, 1};
  }
  static QualitySpec adaptive(double m, double gamma) {
    if (!(m >= 0.0) || !std::isfinite(m))
      throw InputError("adaptive scale requires M >= 0");
    if (!(gamma >= 0.0) || !std::isfinite(gamma))
      throw InputError("adaptive scale requires gamma >= 0");
    if (m == 0.0 && gamma == 0.0)
      throw InputError("adaptive scale requires M > 0 or gamma > 0");
    return {QualityKind::adaptive_scale, m, gamma, 1};
  }
  static QualitySpec cpm(double gamma) {
    if (!(gamma >= 0.0) || !std::isfinite(gamma))
      throw InputError("cpm requires gamma >= 0");
    return {QualityKind::cpm, 0, gamma, 1};
  }
  static QualitySpec rb(double gamma_rb) {
    if (!(gamma_rb > 0.0) || !std::isfinite(gamma_rb))
      throw InputError("rb requires gamma > 0");
    return {QualityKind::rb, 0, 0, gamma_rb};
  }

  bool operator==(const QualitySpec& o) const {
    return kind == o.kind && m == o.m && gamma == o.gamma &&
           gamma_rb == o.gamma_rb;
  }

  std::string to_string() const {
    switch (kind) {
      case QualityKind::modularity: return "modularity";
      case QualityKind::fixed_scale: return "fixed:" + format_value(m);
      case QualityKind::adaptive_scale:
        return "adaptive:" + format_value(m) + "," + format_value(gamma);
      case QualityKind::cpm: return "cpm:" + format_value(gamma);
      case QualityKind::rb: return "rb:" + format_value(gamma_rb);
      case QualityKind::within_sum: return "withinsum";
      case QualityKind::coco: return "coco";
    }
    throw InternalError("QualitySpec: bad kind");
  }

  static QualitySpec parse(const std::string& text) {
    auto num = [&](const std::string& tok) {
      const char* s = tok.c_str();
      char* end = nullptr;
      double x = std::strtod(s, &end);
      if (end == s || *end != '\0' || !std::isfinite(x))
        throw InputError("quality spec: bad number '" + tok + "' in '" + text +
                         "'");
      return x;
    };
    auto split = text.find(':');
    std::string head = text.substr(0, split);
    std::string args = split == std::string::npos ? "" : text.substr(split + 1);
    if (head == "modularity" && args.empty()) return modularity();
    if (head == "withinsum" && args.empty()) return within_sum();
    if (head == "coco" && args.empty()) return coco();
    if (head == "ncut" && args.empty()) return adaptive(0.0, 1.0);
    if (head == "fixed" && !args.empty()) return fixed(num(args));
    if (head == "cpm" && !args.empty()) return cpm(num(args));
    if (head == "rb" && !args.empty()) return rb(num(args));
    if (head == "adaptive") {
      auto comma = args.find(',');
      if (comma != std::string::npos)
        return adaptive(num(args.substr(0, comma)), num(args.substr(comma + 1)));
    }
    throw InputError("quality spec: cannot parse '" + text + "'");
  }
};

struct QualityResult {
  double value = 0.0;
  // set when a normalizing spec (modularity, rb) met a zero-volume graph and
  // fell back to 0 by convention
  bool degenerate = false;
};

namespace detail {

// Per-cluster contribution. vv is the total volume of the evaluated graph
// (only modularity and rb read it). Clusters of zero volume contribute 0 to
// every ratio form: their within weight is necessarily 0 too, and 0 is the
// limit of the adaptive form as the cluster empties.
struct ClusterTerm {
  QualitySpec spec;
  double vv = 0.0;

  double operator()(double w, double v, double mass) const {
    switch (spec.kind) {
      case QualityKind::modularity: {
        if (v <= 0.0) return 0.0;
        double r = v / vv;
        return w / vv - r * r;
      }
      case QualityKind::fixed_scale: {
        double r = v / spec.m;
        return w / spec.m - r * r;
      }
      case QualityKind::adaptive_scale: {
        if (v <= 0.0) return 0.0;
        double denom = spec.m + spec.gamma * v;
        double r = v / denom;
        return w / denom - r * r;
      }
      case QualityKind::cpm:
        return w - spec.gamma * mass * mass;
      case QualityKind::rb:
        return w - spec.gamma_rb * v * v / vv;
      case QualityKind::within_sum:
        return w;
      case QualityKind::coco:
        throw UnsupportedError("coco has no per-cluster contribution");
    }
    throw InternalError("ClusterTerm: bad kind");
  }
};

inline bool needs_total_volume(QualityKind k) {
  return k == QualityKind::modularity || k == QualityKind::rb;
}

// first-occurrence renumbering; memberships compare equal iff they encode
// the same partition
inline void canonical_membership(const std::vector<int>& member, int k,
                                 std::vector<int>& out,
                                 std::vector<int>& scratch) {
  scratch.assign(std::size_t(k), -1);
  out.resize(member.size());
  int next = 0;
  for (std::size_t i = 0; i < member.size(); ++i) {
    int b = member[i];
    if (scratch[std::size_t(b)] == -1) scratch[std::size_t(b)] = next++;
    out[i] = scratch[std::size_t(b)];
  }
}

}  // namespace detail

// Binds a spec to a graph and evaluates memberships without allocating: the
// exhaustive optimizer calls this millions of times. Not thread-safe; make
// one per thread.
class Evaluator {
 public:
  Evaluator(const QualitySpec& spec, const Graph& g)
      : spec_(spec), g_(&g), term_{spec, 0.0} {
    if (spec.kind == QualityKind::coco) {
      std::vector<int> scratch;
      std::vector<int> comp = connected_components(g).membership();
      detail::canonical_membership(comp, g.node_count(), comp_canon_, scratch);
    } else if (detail::needs_total_volume(spec.kind)) {
      term_.vv = total_volume(g);
      degenerate_ = term_.vv <= 0.0;
    }
  }

  bool degenerate() const { return degenerate_; }

  // member holds block ids in [0, k)
  double quality(const std::vector<int>& member, int k) {
    if (spec_.kind == QualityKind::coco) {
      detail::canonical_membership(member, k, canon_buf_, scratch_);
      return canon_buf_ == comp_canon_ ? 1.0 : 0.0;
    }
    if (degenerate_) return 0.0;
    accumulate_stats(*g_, member, k, w_, v_, mass_, size_);
    KahanSum q;
    for (int b = 0; b < k; ++b)
      q.add(term_(w_[std::size_t(b)].value(), v_[std::size_t(b)].value(),
                  mass_[std::size_t(b)]));
    return q.value();
  }

  double quality(const Clustering& c) {
    if (c.node_count() != g_->node_count())
      throw InputError("evaluate: clustering does not match graph");
    return quality(c.membership(), c.block_count());
  }

 private:
  QualitySpec spec_;
  const Graph* g_;
  detail::ClusterTerm term_;
  bool degenerate_ = false;
  std::vector<KahanSum> w_, v_;
  std::vector<double> mass_;
  std::vector<int> size_;
  std::vector<int> comp_canon_, canon_buf_, scratch_;
};

inline QualityResult evaluate_full(const QualitySpec& spec, const Graph& g,
                                   const Clustering& c) {
  Evaluator ev(spec, g);
  return {ev.quality(c), ev.degenerate()};
}

inline double evaluate(const QualitySpec& spec, const Graph& g,
                       const Clustering& c) {
  return evaluate_full(spec, g, c).value;
}

// The single summand for cluster s; for modularity/rb it reads the global
// total volume of g. coco is not sum-decomposable.
inline double cluster_contribution(const QualitySpec& spec, const Graph& g,
                                   const std::vector<int>& s) {
  if (spec.kind == QualityKind::coco)
    throw UnsupportedError("coco has no per-cluster contribution");
  if (s.empty()) throw InputError("cluster_contribution: empty cluster");
  detail::ClusterTerm term{spec, 0.0};
  if (detail::needs_total_volume(spec.kind)) {
    term.vv = total_volume(g);
    if (term.vv <= 0.0) return 0.0;
  }
  double w = within_weight(g, s);
  double v = volume(g, s);
  KahanSum mass;
  for (int i : s) mass.add(g.node_mass(i));
  return term(w, v, mass.value());
}

// Parameter image of the family under edge scaling by alpha: scale-dependent
// parameters move with the weights, dimensionless ones stay.
inline QualitySpec family_scale_param(const QualitySpec& spec, double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw InputError("family_scale_param: alpha must be finite and > 0");
  switch (spec.kind) {
    case QualityKind::fixed_scale: return QualitySpec::fixed(alpha * spec.m);
    case QualityKind::adaptive_scale:
      return QualitySpec::adaptive(alpha * spec.m, spec.gamma);
    case QualityKind::cpm: return QualitySpec::cpm(alpha * spec.gamma);
    default: return spec;
  }
}

// d/dw_c of the fixed-scale contribution w_c/M - (v_c/M)^2 along a change
// that raises within weight (v_c rises with it): 1/M - 2 v_c/M^2. Negative
// exactly when 2 v_c > M, which is where adding internal weight starts to
// hurt.
inline double fixed_scale_within_derivative(double m, double v_c) {
  if (!(m > 0.0) || !std::isfinite(m))
    throw InputError("fixed_scale_within_derivative: M must be > 0");
  return 1.0 / m - 2.0 * v_c / (m * m);
}

}  // namespace axiograph
