#include "skewhowe/statesum.hpp"

#include "skewhowe/error.hpp"

#include <functional>
#include <optional>

namespace skewhowe {

WebGraph build_graph(const Web& web) {
  validate(web);
  WebGraph g;
  g.domain = web.domain;
  std::vector<int> slots;  // slot -> edge, slot order
  BoundaryObject cur = web.domain;
  for (const auto& f : web.domain.factors) {
    slots.push_back(static_cast<int>(g.edges.size()));
    g.edges.push_back(f);
  }
  for (const auto& s : web.slices) {
    if (s.kind == SliceKind::Identity) continue;
    const BoundaryObject next = apply_slice(cur, s);
    const int p = s.position;
    int consumed = 0;
    int created = 0;
    switch (s.kind) {
      case SliceKind::Merge: consumed = 2; created = 1; break;
      case SliceKind::Split: consumed = 1; created = 2; break;
      case SliceKind::Cup: consumed = 0; created = 2; break;
      case SliceKind::Cap: consumed = 2; created = 0; break;
      case SliceKind::Tag: consumed = 1; created = 1; break;
      case SliceKind::Identity: break;
    }
    WebGraph::Vertex v;
    v.slice = s;
    for (int j = 0; j < consumed; ++j) v.in.push_back(slots[static_cast<std::size_t>(p - 1 + j)]);
    for (int j = 0; j < created; ++j) {
      const Factor f = next.slot(p + j);
      v.out.push_back(static_cast<int>(g.edges.size()));
      v.out_factors.push_back(f);
      g.edges.push_back(f);
    }
    slots.erase(slots.begin() + (p - 1), slots.begin() + (p - 1 + consumed));
    slots.insert(slots.begin() + (p - 1), v.out.begin(), v.out.end());
    g.vertices.push_back(std::move(v));
    cur = next;
  }
  g.outputs = slots;
  return g;
}

namespace {

std::vector<State> enumerate(const WebGraph& g, const BasisIndex& bottom, const std::optional<BasisIndex>& top) {
  const int N = g.domain.N;
  std::vector<State> out;
  if (!conforms(g.domain, bottom)) return out;
  State st;
  st.labels.assign(g.edges.size(), Subset());
  for (std::size_t i = 0; i < bottom.size(); ++i) st.labels[i] = bottom[i];

  std::function<void(std::size_t)> rec = [&](std::size_t vi) {
    if (vi == g.vertices.size()) {
      if (top) {
        if (top->size() != g.outputs.size()) return;
        for (std::size_t j = 0; j < g.outputs.size(); ++j)
          if (st.labels[static_cast<std::size_t>(g.outputs[j])] != (*top)[j]) return;
      }
      out.push_back(st);
      return;
    }
    const auto& v = g.vertices[vi];
    auto label = [&](int e) -> Subset& { return st.labels[static_cast<std::size_t>(e)]; };
    switch (v.slice.kind) {
      case SliceKind::Merge: {
        const Subset T = label(v.in[0]);
        const Subset S = label(v.in[1]);
        if (!S.disjoint(T)) return;
        label(v.out[0]) = S | T;
        rec(vi + 1);
        return;
      }
      case SliceKind::Split: {
        const Subset S = label(v.in[0]);
        for (Subset T : subsets_of_size(N, v.slice.a)) {
          if (!T.minus(S).empty()) continue;
          label(v.out[0]) = S.minus(T);
          label(v.out[1]) = T;
          rec(vi + 1);
        }
        return;
      }
      case SliceKind::Tag:
        label(v.out[0]) = label(v.in[0]).complement(N);
        rec(vi + 1);
        return;
      case SliceKind::Cup:
        for (Subset S : subsets_of_size(N, v.slice.a)) {
          label(v.out[0]) = S;
          label(v.out[1]) = S;
          rec(vi + 1);
        }
        return;
      case SliceKind::Cap:
        if (label(v.in[0]) == label(v.in[1])) rec(vi + 1);
        return;
      case SliceKind::Identity:
        rec(vi + 1);
        return;
    }
  };
  rec(0);
  return out;
}

LaurentPoly weight_of(const WebGraph& g, const State& st) {
  const int N = g.domain.N;
  int exponent = 0;
  int sign = 1;
  for (const auto& v : g.vertices) {
    auto label = [&](int e) { return st.labels[static_cast<std::size_t>(e)]; };
    const Slice& s = v.slice;
    switch (s.kind) {
      case SliceKind::Merge:
        exponent += ell(label(v.in[0]), label(v.in[1]));
        break;
      case SliceKind::Split:
        exponent -= ell(label(v.out[1]), label(v.out[0]));
        break;
      case SliceKind::Tag: {
        const Subset S = label(v.in[0]);
        const Subset C = S.complement(N);
        const bool untag = g.edges[static_cast<std::size_t>(v.in[0])].dual;
        exponent += untag ? -ell(S, C) : ell(C, S);
        if (s.side == TagSide::Right && (s.a * (N - s.a)) % 2 != 0) sign = -sign;
        break;
      }
      case SliceKind::Cup:
        if (s.mirrored) {
          const Subset S = label(v.out[0]);
          exponent += ell(S, S.complement(N)) - ell(S.complement(N), S);
        }
        break;
      case SliceKind::Cap:
        if (s.mirrored) {
          const Subset S = label(v.in[1]);
          exponent += ell(S.complement(N), S) - ell(S, S.complement(N));
        }
        break;
      case SliceKind::Identity:
        break;
    }
  }
  return LaurentPoly::monomial(exponent, sign);
}

}  // namespace

std::vector<State> enumerate_states(const Web& web, const BasisIndex& bottom, const BasisIndex& top) {
  return enumerate(build_graph(web), bottom, top);
}

LaurentPoly state_weight(const Web& web, const State& state) { return weight_of(build_graph(web), state); }

TensorVector evaluate_statesum(const Web& web, const TensorVector& x) {
  if (!(x.space() == web.domain))
    throw Error(ErrorKind::ShapeMismatch, "vector lives in " + x.space().to_string() + ", web starts at " +
                                              web.domain.to_string());
  const WebGraph g = build_graph(web);
  TensorVector out(validate(web));
  for (const auto& [idx, c] : x.terms()) {
    for (const State& st : enumerate(g, idx, std::nullopt)) {
      BasisIndex top;
      for (int e : g.outputs) top.push_back(st.labels[static_cast<std::size_t>(e)]);
      out.add(top, c * weight_of(g, st));
    }
  }
  return out;
}

}  // namespace skewhowe
