#include "skewhowe/web.hpp"

#include "skewhowe/error.hpp"

#include <numeric>

namespace skewhowe {

std::string_view to_string(SliceKind k) {
  switch (k) {
    case SliceKind::Identity: return "identity";
    case SliceKind::Merge: return "merge";
    case SliceKind::Split: return "split";
    case SliceKind::Cup: return "cup";
    case SliceKind::Cap: return "cap";
    case SliceKind::Tag: return "tag";
  }
  return "?";
}

namespace {

[[noreturn]] void mismatch(const Slice& s, const BoundaryObject& obj) {
  throw Error(ErrorKind::ShapeMismatch, std::string(to_string(s.kind)) + " at " + std::to_string(s.position) +
                                            " does not fit " + obj.to_string());
}

std::vector<Factor> replace(const BoundaryObject& obj, int position, int span, std::vector<Factor> with) {
  std::vector<Factor> fs(obj.factors.begin(), obj.factors.begin() + (position - 1));
  fs.insert(fs.end(), with.begin(), with.end());
  fs.insert(fs.end(), obj.factors.begin() + (position - 1 + span), obj.factors.end());
  return fs;
}

}  // namespace

BoundaryObject apply_slice(const BoundaryObject& obj, const Slice& s) {
  const int N = obj.N;
  const int n = obj.size();
  const int p = s.position;
  switch (s.kind) {
    case SliceKind::Identity:
      return obj;
    case SliceKind::Merge: {
      if (p < 1 || p + 1 > n || s.a < 0 || s.b < 0 || s.a + s.b > N) mismatch(s, obj);
      const Factor r = obj.slot(p), l = obj.slot(p + 1);
      if (l.dual || r.dual || l.color != s.a || r.color != s.b) mismatch(s, obj);
      return BoundaryObject(N, replace(obj, p, 2, {{s.a + s.b, false}}));
    }
    case SliceKind::Split: {
      if (p < 1 || p > n || s.a < 0 || s.b < 0 || s.a + s.b > N) mismatch(s, obj);
      const Factor f = obj.slot(p);
      if (f.dual || f.color != s.a + s.b) mismatch(s, obj);
      return BoundaryObject(N, replace(obj, p, 1, {{s.b, false}, {s.a, false}}));
    }
    case SliceKind::Cup: {
      if (p < 1 || p > n + 1 || s.a < 0 || s.a > N) mismatch(s, obj);
      if (s.mirrored) return BoundaryObject(N, replace(obj, p, 0, {{s.a, false}, {s.a, true}}));
      return BoundaryObject(N, replace(obj, p, 0, {{s.a, true}, {s.a, false}}));
    }
    case SliceKind::Cap: {
      if (p < 1 || p + 1 > n || s.a < 0 || s.a > N) mismatch(s, obj);
      const Factor r = obj.slot(p), l = obj.slot(p + 1);
      const bool ok = s.mirrored ? (!l.dual && r.dual) : (l.dual && !r.dual);
      if (!ok || l.color != s.a || r.color != s.a) mismatch(s, obj);
      return BoundaryObject(N, replace(obj, p, 2, {}));
    }
    case SliceKind::Tag: {
      if (p < 1 || p > n || s.a < 0 || s.a > N) mismatch(s, obj);
      const Factor f = obj.slot(p);
      if (!f.dual && f.color == s.a) return BoundaryObject(N, replace(obj, p, 1, {{N - s.a, true}}));
      if (f.dual && f.color == N - s.a) return BoundaryObject(N, replace(obj, p, 1, {{s.a, false}}));
      mismatch(s, obj);
    }
  }
  mismatch(s, obj);
}

BoundaryObject validate(const Web& web) {
  BoundaryObject cur = web.domain;
  for (std::size_t i = 0; i < web.slices.size(); ++i) {
    try {
      cur = apply_slice(cur, web.slices[i]);
    } catch (const Error& e) {
      throw IllFormedWeb(i, e.what());
    }
  }
  return cur;
}

Web compose(const Web& first, const Web& second) {
  if (!(validate(first) == second.domain))
    throw Error(ErrorKind::ShapeMismatch, "cannot compose: codomain " + validate(first).to_string() +
                                              " differs from domain " + second.domain.to_string());
  Web out = first;
  out.slices.insert(out.slices.end(), second.slices.begin(), second.slices.end());
  return out;
}

GlWeight step_weight(int N, const GlWeight& colors, const LadderStep& step) {
  const int m = static_cast<int>(colors.size());
  const int i = step.index;
  if (i < 1 || i + 1 > m) throw Error(ErrorKind::InvalidInput, "ladder index out of range 1..m-1");
  if (step.multiplicity < 0) throw Error(ErrorKind::InvalidInput, "negative rung width");
  GlWeight k = colors;
  const int a = step.multiplicity;
  if (step.sign == Sign::Minus) {
    k[i - 1] -= a;
    k[i] += a;
  } else {
    k[i - 1] += a;
    k[i] -= a;
  }
  if (k[i - 1] < 0 || k[i - 1] > N || k[i] < 0 || k[i] > N)
    throw Error(ErrorKind::Annihilated, "weight leaves 0..N");
  return k;
}

std::vector<Slice> rung_slices(int N, const GlWeight& colors, const LadderStep& step) {
  step_weight(N, colors, step);
  const int i = step.index;
  const int a = step.multiplicity;
  if (a == 0) return {};
  const int ki = colors[i - 1];
  const int kj = colors[i];
  // E_{-i} moves a strands from upright i to upright i+1; E_{+i} the reverse.
  if (step.sign == Sign::Minus) return {Slice::split(a, ki - a, i), Slice::merge(kj, a, i + 1)};
  return {Slice::split(kj - a, a, i + 1), Slice::merge(a, ki, i)};
}

Web ladder_from_word(int N, const GlWeight& start, const std::vector<LadderStep>& word) {
  Web web{BoundaryObject::plain(N, start), {}};
  GlWeight k = start;
  for (const auto& step : word) {
    auto slices = rung_slices(N, k, step);
    web.slices.insert(web.slices.end(), slices.begin(), slices.end());
    k = step_weight(N, k, step);
  }
  return web;
}

TensorVector apply_slice(const Slice& s, const TensorVector& x) {
  const int N = x.space().N;
  const int p = s.position;
  switch (s.kind) {
    case SliceKind::Identity:
      return x;
    case SliceKind::Merge:
      return apply_merge(s.a, s.b, p, x);
    case SliceKind::Split:
      return apply_split(s.a, s.b, p, x);
    case SliceKind::Tag:
      return apply_tag(s.a, s.side, p, x);
    case SliceKind::Cup:
      if (!s.mirrored) return apply_cup(s.a, p, x);
      apply_slice(x.space(), s);
      return apply_untag(s.a, TagSide::Left, p,
                         apply_tag(N - s.a, TagSide::Left, p + 1, apply_cup(N - s.a, p, x)));
    case SliceKind::Cap:
      if (!s.mirrored) return apply_cap(s.a, p, x);
      apply_slice(x.space(), s);
      return apply_cap(N - s.a, p,
                       apply_untag(N - s.a, TagSide::Left, p, apply_tag(s.a, TagSide::Left, p + 1, x)));
  }
  return x;
}

TensorVector evaluate_dense(const Web& web, const TensorVector& x) {
  if (!(x.space() == web.domain))
    throw Error(ErrorKind::ShapeMismatch, "vector lives in " + x.space().to_string() + ", web starts at " +
                                              web.domain.to_string());
  validate(web);
  TensorVector cur = x;
  for (const auto& s : web.slices) cur = apply_slice(s, cur);
  return cur;
}

Web reflect(const Web& web) {
  Web out{validate(web), {}};
  for (auto it = web.slices.rbegin(); it != web.slices.rend(); ++it) {
    Slice s = *it;
    switch (s.kind) {
      case SliceKind::Merge: s.kind = SliceKind::Split; break;
      case SliceKind::Split: s.kind = SliceKind::Merge; break;
      case SliceKind::Cup:
        s.kind = SliceKind::Cap;
        s.mirrored = !s.mirrored;
        break;
      case SliceKind::Cap:
        s.kind = SliceKind::Cup;
        s.mirrored = !s.mirrored;
        break;
      case SliceKind::Tag: s.side = s.side == TagSide::Left ? TagSide::Right : TagSide::Left; break;
      case SliceKind::Identity: break;
    }
    out.slices.push_back(s);
  }
  return out;
}

BoundaryObject highest_object(int N, int l, int m) {
  std::vector<int> colors(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < l && i < m; ++i) colors[static_cast<std::size_t>(i)] = N;
  return BoundaryObject::plain(N, colors);
}

namespace {

/// Index of the one-dimensional space of a plain object with colours N or 0.
BasisIndex top_index(const BoundaryObject& obj) {
  BasisIndex idx;
  for (const auto& f : obj.factors) {
    if (f.dual || (f.color != 0 && f.color != obj.N))
      throw Error(ErrorKind::ShapeMismatch, "boundary " + obj.to_string() + " is not (N^l) with padding");
    idx.push_back(f.color ? Subset::range(1, obj.N) : Subset());
  }
  return idx;
}

}  // namespace

LaurentPoly ev_closed(const Web& web) {
  const BoundaryObject cod = validate(web);
  if (!(cod == web.domain)) throw Error(ErrorKind::ShapeMismatch, "closed web must end where it starts");
  const BasisIndex idx = top_index(web.domain);
  return evaluate_dense(web, TensorVector::basis(web.domain, idx)).coefficient(idx);
}

int d_norm(int N, const GlWeight& k) {
  const int total = std::accumulate(k.begin(), k.end(), 0);
  if (total % N != 0) throw Error(ErrorKind::InvalidInput, "weight sum is not a multiple of N");
  const int l = total / N;
  int twice = N * (N - 1) * l;
  for (int c : k) twice -= c * (c - 1);
  if (twice % 2 != 0) throw Error(ErrorKind::NonIntegral, "d(k) is not an integer");
  return twice / 2;
}

namespace {

GlWeight plain_colors(const BoundaryObject& obj) {
  GlWeight k;
  for (const auto& f : obj.factors) {
    if (f.dual) throw Error(ErrorKind::ShapeMismatch, "web form needs a plain codomain");
    k.push_back(f.color);
  }
  return k;
}

}  // namespace

LaurentPoly web_form(const Web& u, const Web& w) {
  if (!(u.domain == w.domain)) throw Error(ErrorKind::ShapeMismatch, "webs start at different objects");
  const BoundaryObject cu = validate(u);
  const BoundaryObject cw = validate(w);
  if (!(cu == cw)) throw Error(ErrorKind::ShapeMismatch, "webs end at different objects");
  top_index(u.domain);
  return ev_closed(compose(w, reflect(u))).shifted(d_norm(cw.N, plain_colors(cw)));
}

TensorVector web_vector(const Web& web) {
  return evaluate_dense(web, TensorVector::basis(web.domain, top_index(web.domain)));
}

}  // namespace skewhowe
