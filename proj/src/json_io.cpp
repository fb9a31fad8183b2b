#include "skewhowe/json_io.hpp"

#include "skewhowe/error.hpp"

#include <limits>

namespace skewhowe {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidInput, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<int>();
}

json subset_json(Subset s) { return s.descending(); }

Subset subset_from(const json& j, int N) {
  if (!j.is_array()) bad("subset must be an array");
  Subset s;
  for (const auto& e : j) {
    const int v = as_int(e, "subset element");
    if (v < 1 || v > N) bad("subset element out of range 1..N");
    if (s.contains(v)) bad("repeated subset element");
    s.insert(v);
  }
  return s;
}

}  // namespace

json to_json(const LaurentPoly& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) {
    if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
      out.push_back({e, static_cast<long long>(c)});
    else
      out.push_back({e, c.str()});
  }
  return out;
}

LaurentPoly poly_from_json(const json& j) {
  if (!j.is_array()) bad("polynomial must be an array of [exponent, coefficient] pairs");
  LaurentPoly p;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2) bad("polynomial term must be [exponent, coefficient]");
    const int e = as_int(term[0], "exponent");
    Integer c;
    if (term[1].is_number_integer())
      c = Integer(term[1].get<long long>());
    else if (term[1].is_string()) {
      try {
        c = Integer(term[1].get<std::string>());
      } catch (const std::exception&) {
        bad("coefficient string is not an integer");
      }
    } else {
      bad("coefficient must be an integer or a decimal string");
    }
    p.add_term(e, c);
  }
  return p;
}

json to_json(const Tableau& t) {
  return {{"N", t.shape().N}, {"l", t.shape().rows}, {"rows", t.rows()}};
}

Tableau tableau_from_json(const json& j) {
  const Shape shape(as_int(field(j, "N"), "N"), as_int(field(j, "l"), "l"));
  const json& rows = field(j, "rows");
  if (!rows.is_array()) bad("rows must be an array");
  std::vector<std::vector<int>> r;
  for (const auto& row : rows) {
    if (!row.is_array()) bad("row must be an array");
    std::vector<int> vals;
    for (const auto& e : row) vals.push_back(as_int(e, "tableau entry"));
    r.push_back(std::move(vals));
  }
  Tableau t(shape, std::move(r));
  if (!t.is_column_strict()) bad("tableau is not column-strict");
  return t;
}

json to_json(const BoundaryObject& obj) {
  json out = json::array();
  for (const auto& f : obj.factors) out.push_back({{"color", f.color}, {"dual", f.dual}});
  return out;
}

BoundaryObject object_from_json(int N, const json& j) {
  if (!j.is_array()) bad("boundary object must be an array of factors");
  std::vector<Factor> fs;
  for (const auto& f : j) {
    const bool dual = f.contains("dual") ? f.at("dual").get<bool>() : false;
    fs.push_back({as_int(field(f, "color"), "color"), dual});
  }
  return BoundaryObject(N, std::move(fs));
}

json to_json(const TensorVector& x) {
  json terms = json::array();
  for (const auto& [idx, c] : x.terms()) {
    json subsets = json::array();
    for (Subset s : idx) subsets.push_back(subset_json(s));
    terms.push_back({{"subsets", subsets}, {"coeff", to_json(c)}});
  }
  return {{"N", x.space().N}, {"space", to_json(x.space())}, {"terms", terms}};
}

TensorVector tensor_from_json(const json& j) {
  const int N = as_int(field(j, "N"), "N");
  TensorVector x(object_from_json(N, field(j, "space")));
  const json& terms = field(j, "terms");
  if (!terms.is_array()) bad("terms must be an array");
  for (const auto& term : terms) {
    BasisIndex idx;
    const json& subsets = field(term, "subsets");
    if (!subsets.is_array()) bad("subsets must be an array");
    for (const auto& s : subsets) idx.push_back(subset_from(s, N));
    if (!conforms(x.space(), idx)) bad("term does not fit the space");
    x.add(idx, poly_from_json(field(term, "coeff")));
  }
  return x;
}

json to_json(const Slice& s) {
  json out = {{"kind", std::string(to_string(s.kind))}, {"pos", s.position}};
  switch (s.kind) {
    case SliceKind::Merge:
    case SliceKind::Split:
      out["a"] = s.a;
      out["b"] = s.b;
      break;
    case SliceKind::Cup:
    case SliceKind::Cap:
      out["a"] = s.a;
      if (s.mirrored) out["mirrored"] = true;
      break;
    case SliceKind::Tag:
      out["a"] = s.a;
      out["side"] = s.side == TagSide::Left ? "left" : "right";
      break;
    case SliceKind::Identity:
      break;
  }
  return out;
}

json to_json(const Web& w) {
  json slices = json::array();
  for (const auto& s : w.slices) slices.push_back(to_json(s));
  return {{"N", w.domain.N}, {"domain", to_json(w.domain)}, {"slices", slices}};
}

Web web_from_json(const json& j) {
  const int N = as_int(field(j, "N"), "N");
  Web w{object_from_json(N, field(j, "domain")), {}};
  const json slices = j.contains("slices") ? j.at("slices") : json::array();
  if (!slices.is_array()) bad("slices must be an array");
  for (const auto& sj : slices) {
    if (!sj.is_object() || !sj.contains("kind") || !sj.at("kind").is_string()) bad("slice needs a kind");
    const std::string kind = sj.at("kind").get<std::string>();
    Slice s;
    s.position = sj.contains("pos") ? as_int(sj.at("pos"), "pos") : 1;
    s.a = sj.contains("a") ? as_int(sj.at("a"), "a") : 0;
    s.b = sj.contains("b") ? as_int(sj.at("b"), "b") : 0;
    if (sj.contains("mirrored")) {
      if (!sj.at("mirrored").is_boolean()) bad("mirrored must be a boolean");
      s.mirrored = sj.at("mirrored").get<bool>();
    }
    if (kind == "identity") s.kind = SliceKind::Identity;
    else if (kind == "merge") s.kind = SliceKind::Merge;
    else if (kind == "split") s.kind = SliceKind::Split;
    else if (kind == "cup") s.kind = SliceKind::Cup;
    else if (kind == "cap") s.kind = SliceKind::Cap;
    else if (kind == "tag") s.kind = SliceKind::Tag;
    else bad("unknown slice kind \"" + kind + "\"");
    if (sj.contains("side")) {
      if (!sj.at("side").is_string()) bad("tag side must be left or right");
      const std::string side = sj.at("side").get<std::string>();
      if (side == "left") s.side = TagSide::Left;
      else if (side == "right") s.side = TagSide::Right;
      else bad("tag side must be left or right");
    }
    w.slices.push_back(s);
  }
  return w;
}

json to_json(const TableauVector& x) {
  json terms = json::array();
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it)
    terms.push_back({{"rows", it->first.rows()}, {"coeff", to_json(it->second)}});
  return {{"N", x.shape().N}, {"l", x.shape().rows}, {"terms", terms}};
}

TableauVector tableau_vector_from_json(const json& j) {
  const Shape shape(as_int(field(j, "N"), "N"), as_int(field(j, "l"), "l"));
  TableauVector x(shape);
  const json& terms = field(j, "terms");
  if (!terms.is_array()) bad("terms must be an array");
  for (const auto& term : terms) {
    json tj = {{"N", shape.N}, {"l", shape.rows}, {"rows", field(term, "rows")}};
    x.add(tableau_from_json(tj), poly_from_json(field(term, "coeff")));
  }
  return x;
}

json to_json(const GradedMatrix& g) {
  json labels = json::array();
  for (const auto& t : g.labels) labels.push_back(t.rows());
  json entries = json::array();
  for (const auto& row : g.entries) {
    json r = json::array();
    for (const auto& e : row) r.push_back(to_json(e));
    entries.push_back(r);
  }
  return {{"labels", labels}, {"entries", entries}};
}

json to_json(const PeelWord& w) {
  json out = json::array();
  for (const auto& s : w) out.push_back({s.index, s.multiplicity});
  return out;
}

}  // namespace skewhowe
