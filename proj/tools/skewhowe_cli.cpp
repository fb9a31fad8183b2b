// skewhowe: command-line front end.
//
// Every subcommand prints one JSON document (or a plain table with
// --format table). Exit status: 0 ok, 2 bad input, 3 internal invariant
// violation.

#include "skewhowe/bases.hpp"
#include "skewhowe/error.hpp"
#include "skewhowe/howe.hpp"
#include "skewhowe/json_io.hpp"
#include "skewhowe/parallel.hpp"
#include "skewhowe/relations.hpp"
#include "skewhowe/statesum.hpp"
#include "skewhowe/webalg.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

using namespace skewhowe;

namespace {

struct Options {
  std::string format = "json";
  int N = 2;
  int l = 1;
  std::string type;
  std::string k;
  bool semistandard = false;
  std::string word;
  std::string web;
  std::string u;
  std::string w;
  std::string vector;
  std::string evaluator = "dense";
  std::string sign = "-";
  int index = 1;
  int r = 1;
  std::string basis = "lt";
  bool relations = false;
  bool evaluators = false;
  bool howe = false;
  bool blocks = false;
  std::uint64_t seed = 1;
  int count = 100;
};

bool table(const Options& o) { return o.format == "table"; }

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidInput, "not an integer list: " + s);
    }
  }
  return out;
}

/// "-1^2,+3" -> E_{-1}^{(2)} then E_{+3}, in application order.
std::vector<LadderStep> parse_word(const std::string& s) {
  std::vector<LadderStep> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.size() < 2 || (tok[0] != '+' && tok[0] != '-'))
      throw Error(ErrorKind::InvalidInput, "word step must look like -1 or +2^3: " + tok);
    LadderStep step;
    step.sign = tok[0] == '+' ? Sign::Plus : Sign::Minus;
    const auto caret = tok.find('^');
    try {
      step.index = std::stoi(tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
      step.multiplicity = caret == std::string::npos ? 1 : std::stoi(tok.substr(caret + 1));
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidInput, "bad word step: " + tok);
    }
    out.push_back(step);
  }
  return out;
}

/// A path, "-" for stdin, or inline JSON starting with '{'.
json read_json(const std::string& src) {
  std::string text;
  if (!src.empty() && (src[0] == '{' || src[0] == '[')) {
    text = src;
  } else if (src == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(src);
    if (!in) throw Error(ErrorKind::InvalidInput, "cannot read " + src);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

GlWeight require_type(const Options& o, const std::string& s, const char* name) {
  if (s.empty()) throw Error(ErrorKind::InvalidInput, std::string("--") + name + " is required");
  GlWeight k = parse_ints(s);
  const Shape sh(o.N, o.l);
  if (static_cast<int>(k.size()) != sh.entry_bound())
    throw Error(ErrorKind::InvalidInput, std::string("--") + name + " needs m = N*l entries");
  int sum = 0;
  for (int c : k) {
    if (c < 0 || c > o.N) throw Error(ErrorKind::InvalidInput, std::string("--") + name + " entries must lie in 0..N");
    sum += c;
  }
  if (sum != sh.entry_bound()) throw Error(ErrorKind::InvalidInput, std::string("--") + name + " must sum to N*l");
  return k;
}

std::string subset_text(Subset s) {
  std::string out;
  for (int e : s.descending()) out += std::to_string(e);
  return out.empty() ? "0" : out;
}

void print_tensor_table(const TensorVector& x) {
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
    std::string basis;
    for (std::size_t i = it->first.size(); i-- > 0;) {
      const bool dual = x.space().factors[i].dual;
      basis += (basis.empty() ? "" : " (x) ") + std::string(dual ? "xhat_" : "x_") + subset_text(it->first[i]);
    }
    std::cout << it->second.to_string() << "\t" << basis << "\n";
  }
}

void print_tableau_vector_table(const TableauVector& x) {
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it)
    std::cout << it->second.to_string() << "\t" << it->first.to_string() << "\n";
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_tableaux(const Options& o) {
  const Shape sh(o.N, o.l);
  std::optional<GlWeight> type;
  if (!o.type.empty()) type = require_type(o, o.type, "type");
  const auto ts = enumerate_tableaux(sh, type, o.semistandard);
  if (table(o)) {
    for (const auto& t : ts) std::cout << t.to_string() << "\n";
    return 0;
  }
  json out = json::array();
  for (const auto& t : ts) out.push_back(to_json(t));
  emit(out);
  return 0;
}

int cmd_ladder(const Options& o) {
  const GlWeight k = parse_ints(o.k);
  const Web web = ladder_from_word(o.N, k, parse_word(o.word));
  const BoundaryObject cod = validate(web);
  if (table(o)) {
    std::cout << web.domain.to_string() << " -> " << cod.to_string() << "\n";
    for (const auto& s : web.slices) std::cout << to_json(s).dump() << "\n";
    return 0;
  }
  emit(to_json(web));
  return 0;
}

TensorVector run_evaluator(const Options& o, const Web& web, const TensorVector& x) {
  if (o.evaluator == "statesum") return evaluate_statesum(web, x);
  if (o.evaluator == "dense") return evaluate_dense(web, x);
  throw Error(ErrorKind::InvalidInput, "--evaluator must be dense or statesum");
}

int cmd_eval(const Options& o) {
  const Web web = web_from_json(read_json(o.web));
  validate(web);
  if (!o.vector.empty()) {
    const TensorVector y = run_evaluator(o, web, tensor_from_json(read_json(o.vector)));
    if (table(o))
      print_tensor_table(y);
    else
      emit(to_json(y));
    return 0;
  }
  // No vector: the whole matrix on the standard basis.
  const Evaluator ev = o.evaluator == "statesum" ? Evaluator::StateSum : Evaluator::Dense;
  if (o.evaluator != "dense" && o.evaluator != "statesum")
    throw Error(ErrorKind::InvalidInput, "--evaluator must be dense or statesum");
  const WebMatrix mat = web_matrix(web, ev, Exec::Parallel);
  json cols = json::array();
  for (const auto& [idx, y] : mat) {
    json subsets = json::array();
    for (Subset s : idx) subsets.push_back(s.descending());
    if (table(o)) {
      std::cout << "input";
      for (Subset s : idx) std::cout << " " << subset_text(s);
      std::cout << "\n";
      print_tensor_table(y);
    }
    cols.push_back({{"input", subsets}, {"image", to_json(y)}});
  }
  if (!table(o)) emit(cols);
  return 0;
}

int cmd_ev(const Options& o) {
  const LaurentPoly p = ev_closed(web_from_json(read_json(o.web)));
  if (table(o))
    std::cout << p.to_string() << "\n";
  else
    emit({{"ev", to_json(p)}});
  return 0;
}

int cmd_form(const Options& o) {
  const Web u = web_from_json(read_json(o.u));
  const Web w = web_from_json(read_json(o.w));
  const LaurentPoly p = web_form(u, w);
  if (table(o))
    std::cout << p.to_string() << "\n";
  else
    emit({{"form", to_json(p)}});
  return 0;
}

Sign parse_sign(const std::string& s) {
  if (s == "+" || s == "plus") return Sign::Plus;
  if (s == "-" || s == "minus") return Sign::Minus;
  throw Error(ErrorKind::InvalidInput, "--sign must be + or -");
}

int cmd_act(const Options& o) {
  const TableauVector x = tableau_vector_from_json(read_json(o.vector));
  const TableauVector y = act_divided(parse_sign(o.sign), o.index, o.r, x);
  if (table(o))
    print_tableau_vector_table(y);
  else
    emit(to_json(y));
  return 0;
}

int cmd_lt_basis(const Options& o) {
  const Shape sh(o.N, o.l);
  const BlockBasis b = compute_block(sh, require_type(o, o.type, "type"));
  json out = json::array();
  for (const auto& el : b.lt) {
    if (table(o)) {
      std::cout << "A^T for " << el.tableau.to_string() << "  word " << to_json(el.word).dump() << "\n";
      print_tableau_vector_table(el.expansion);
    }
    out.push_back({{"tableau", to_json(el.tableau)}, {"word", to_json(el.word)}, {"expansion", to_json(el.expansion)}});
  }
  if (!table(o)) emit(out);
  return 0;
}

int cmd_dual_canonical(const Options& o) {
  const Shape sh(o.N, o.l);
  const BlockBasis b = compute_block(sh, require_type(o, o.type, "type"));
  json out = json::array();
  for (std::size_t i = 0; i < b.labels.size(); ++i) {
    const auto& el = b.dual[i];
    json beta = json::array();
    for (auto it = el.beta.rbegin(); it != el.beta.rend(); ++it)
      beta.push_back({{"tableau", it->first.rows()}, {"beta", to_json(it->second)}});
    const TensorVector tensor = to_tensor(el.expansion);
    if (table(o)) {
      std::cout << "b^T for " << el.tableau.to_string() << "  word " << to_json(b.lt[i].word).dump() << "\n";
      print_tableau_vector_table(el.expansion);
      for (auto it = el.beta.rbegin(); it != el.beta.rend(); ++it)
        std::cout << "  beta " << it->first.to_string() << " = " << it->second.to_string() << "\n";
      std::cout << "  tensor:\n";
      print_tensor_table(tensor);
    }
    out.push_back({{"tableau", to_json(el.tableau)},
                   {"word", to_json(b.lt[i].word)},
                   {"expansion", to_json(el.expansion)},
                   {"beta", beta},
                   {"tensor", to_json(tensor)}});
  }
  if (!table(o)) emit(out);
  return 0;
}

void print_matrix_table(const GradedMatrix& g) {
  for (std::size_t i = 0; i < g.labels.size(); ++i) {
    std::cout << g.labels[i].to_string() << " |";
    for (const auto& e : g.entries[i]) std::cout << "  " << e.to_string();
    std::cout << "\n";
  }
}

int cmd_gram(const Options& o) {
  const Shape sh(o.N, o.l);
  BasisKind kind;
  if (o.basis == "lt")
    kind = BasisKind::LT;
  else if (o.basis == "dc" || o.basis == "dual-canonical")
    kind = BasisKind::DualCanonical;
  else
    throw Error(ErrorKind::InvalidInput, "--basis must be lt or dc");
  const GradedMatrix g = gram_matrix(sh, require_type(o, o.type, "type"), kind);
  if (table(o))
    print_matrix_table(g);
  else
    emit(to_json(g));
  return 0;
}

int cmd_cartan(const Options& o) {
  const Shape sh(o.N, o.l);
  const GlWeight k = require_type(o, o.k.empty() ? o.type : o.k, "k");
  const GradedMatrix c = cartan_matrix(sh, k);
  const FrobeniusReport fr = frobenius_check(c, sh.N, k);
  const int gp = gorenstein_parameter(sh.N, k);
  if (table(o)) {
    print_matrix_table(c);
    std::cout << "gorenstein " << gp << "\n";
    std::cout << "total " << fr.total.to_string() << "\n";
    std::cout << "frobenius " << (fr.pass ? "pass" : "fail") << "\n";
    return 0;
  }
  emit({{"cartan", to_json(c)},
        {"gorenstein", gp},
        {"frobenius", {{"total", to_json(fr.total)}, {"d", fr.d}, {"pass", fr.pass}}}});
  return 0;
}

/// Random ladder on m uprights of colours 0..N, up to `rungs` rungs.
Web random_ladder(std::mt19937_64& rng, int N, int m, int rungs) {
  std::uniform_int_distribution<int> colour(0, N);
  std::uniform_int_distribution<int> index(1, m - 1);
  std::uniform_int_distribution<int> width(1, std::max(1, N - 1));
  GlWeight k(static_cast<std::size_t>(m));
  for (auto& c : k) c = colour(rng);
  std::vector<LadderStep> word;
  GlWeight cur = k;
  for (int attempt = 0; attempt < 4 * rungs && static_cast<int>(word.size()) < rungs; ++attempt) {
    const LadderStep step{rng() % 2 ? Sign::Plus : Sign::Minus, index(rng), width(rng)};
    try {
      cur = step_weight(N, cur, step);
      word.push_back(step);
    } catch (const Error&) {
    }
  }
  return ladder_from_word(N, k, word);
}

int cmd_verify(const Options& o) {
  json report = json::object();
  bool ok = true;
  std::string first_failure;
  auto fail = [&](const std::string& what) {
    if (ok) first_failure = what;
    ok = false;
  };
  if (o.relations) {
    json rel = json::array();
    for (const auto& s : verify_relations(o.N)) {
      rel.push_back({{"relation", s.relation}, {"cases", s.cases}, {"failures", s.failures}, {"failed", s.failed}});
      if (table(o)) std::cout << s.relation << "\t" << s.cases << " cases\t" << s.failures << " failures\n";
      if (s.failures) fail("relation " + s.relation);
    }
    report["relations"] = rel;
  }
  if (o.evaluators) {
    std::mt19937_64 rng(o.seed);
    int mismatches = 0;
    for (int c = 0; c < o.count; ++c) {
      const int m = 2 + static_cast<int>(rng() % 3);
      const Web web = random_ladder(rng, o.N, m, 3);
      if (web_matrix(web, Evaluator::Dense, Exec::Parallel) != web_matrix(web, Evaluator::StateSum, Exec::Parallel))
        ++mismatches;
    }
    if (table(o)) std::cout << "evaluators\t" << o.count << " ladders\t" << mismatches << " mismatches\n";
    report["evaluators"] = {{"seed", o.seed}, {"ladders", o.count}, {"mismatches", mismatches}};
    if (mismatches) fail("evaluator equivalence");
  }
  if (o.howe) {
    const Shape sh(o.N, o.l);
    int cases = 0, mismatches = 0;
    for (const auto& t : enumerate_tableaux(sh)) {
      const GlWeight k = tableau_type(t);
      for (int i = 1; i < sh.entry_bound(); ++i)
        for (int a = 1; a <= 2; ++a)
          for (Sign sg : {Sign::Minus, Sign::Plus}) {
            ++cases;
            const TableauVector lhs = act_divided(sg, i, a, TableauVector::delta(t));
            TableauVector rhs(sh);
            try {
              const Web w = ladder_from_word(sh.N, k, {{sg, i, a}});
              rhs = from_tensor(sh, evaluate_dense(w, TensorVector::basis(w.domain, tableau_index(t))));
            } catch (const Error& e) {
              if (e.kind() != ErrorKind::Annihilated) throw;
            }
            if (lhs.terms() != rhs.terms()) ++mismatches;
          }
    }
    if (table(o)) std::cout << "howe\t" << cases << " cases\t" << mismatches << " mismatches\n";
    report["howe"] = {{"cases", cases}, {"mismatches", mismatches}};
    if (mismatches) fail("skew Howe consistency");
  }
  if (o.blocks) {
    const Shape sh(o.N, o.l);
    json blocks = json::array();
    const auto all = all_blocks(sh, Exec::Parallel);
    const auto cartan = all_cartan(all, Exec::Parallel);
    for (std::size_t i = 0; i < all.size(); ++i) {
      const GradedMatrix dc = gram_matrix(all[i], BasisKind::DualCanonical);
      bool almost_orth = true;
      for (std::size_t p = 0; p < dc.labels.size(); ++p)
        for (std::size_t q = 0; q < dc.labels.size(); ++q)
          if (!(dc.entries[p][q] - LaurentPoly(p == q ? 1 : 0)).in_positive_part()) almost_orth = false;
      const FrobeniusReport fr = frobenius_check(cartan[i], sh.N, all[i].type);
      blocks.push_back({{"type", all[i].type},
                        {"size", all[i].labels.size()},
                        {"almost_orthogonal", almost_orth},
                        {"frobenius", fr.pass}});
      if (table(o))
        std::cout << "block " << json(all[i].type).dump() << "\t" << all[i].labels.size() << " tableaux\t"
                  << (almost_orth && fr.pass ? "ok" : "FAIL") << "\n";
      if (!almost_orth) fail("almost orthogonality");
      if (!fr.pass) fail("frobenius");
    }
    report["blocks"] = blocks;
  }
  report["pass"] = ok;
  if (!table(o)) emit(report);
  if (!ok) {
    std::cerr << "INVARIANT-VIOLATION: " << first_failure << "\n";
    return 3;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact SL_N web evaluation, skew Howe duality and dual canonical bases"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));

  auto shape_opts = [&](CLI::App* c) {
    c->add_option("--N", o.N, "number of columns / strand colour bound")->required();
    c->add_option("--l", o.l, "number of rows")->required();
  };

  auto* tab = app.add_subcommand("tableaux", "enumerate tableaux of shape (N^l) in descending order");
  shape_opts(tab);
  tab->add_option("--type", o.type, "comma-separated type k_1,...,k_m");
  tab->add_flag("--semistandard", o.semistandard, "only semistandard tableaux");

  auto* lad = app.add_subcommand("ladder", "ladder web for a divided-power word");
  lad->add_option("--N", o.N)->required();
  lad->add_option("--k", o.k, "starting colours, slot 1 first")->required();
  lad->add_option("--word", o.word, "steps in application order, e.g. -1^2,+2")->required();

  auto* ev = app.add_subcommand("eval", "apply a web to a vector (or to the whole standard basis)");
  ev->add_option("--web", o.web, "web JSON (path, - or inline)")->required();
  ev->add_option("--vector", o.vector, "tensor vector JSON");
  ev->add_option("--evaluator", o.evaluator, "dense or statesum");

  auto* evc = app.add_subcommand("ev", "evaluate a closed web");
  evc->add_option("--web", o.web)->required();

  auto* form = app.add_subcommand("form", "web form <u,w>");
  form->add_option("--u", o.u)->required();
  form->add_option("--w", o.w)->required();

  auto* act = app.add_subcommand("act", "divided power E_{+-i}^{(r)} on a tableau vector");
  act->add_option("--sign", o.sign, "+ or -")->required();
  act->add_option("--i", o.index)->required();
  act->add_option("--r", o.r);
  act->add_option("--vector", o.vector, "tableau vector JSON")->required();

  auto* lt = app.add_subcommand("lt-basis", "LT basis vectors of one type");
  shape_opts(lt);
  lt->add_option("--type", o.type)->required();

  auto* dc = app.add_subcommand("dual-canonical", "dual canonical basis of one type");
  shape_opts(dc);
  dc->add_option("--type", o.type)->required();

  auto* gram = app.add_subcommand("gram", "Gram matrix of the LT or dual canonical basis");
  shape_opts(gram);
  gram->add_option("--type", o.type)->required();
  gram->add_option("--basis", o.basis, "lt or dc");

  auto* cartan = app.add_subcommand("cartan", "graded Cartan matrix of H(k,N)");
  shape_opts(cartan);
  cartan->add_option("--k", o.k)->required();

  auto* verify = app.add_subcommand("verify", "relation and property sweeps");
  verify->add_option("--N", o.N);
  verify->add_option("--l", o.l);
  verify->add_flag("--relations", o.relations, "spider relations for this N");
  verify->add_flag("--evaluators", o.evaluators, "dense vs state-sum on random ladders");
  verify->add_flag("--howe", o.howe, "tableaux action vs ladders for shape (N^l)");
  verify->add_flag("--blocks", o.blocks, "dual canonical and Frobenius checks on every block");
  verify->add_option("--seed", o.seed);
  verify->add_option("--count", o.count);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*tab) return cmd_tableaux(o);
    if (*lad) return cmd_ladder(o);
    if (*ev) return cmd_eval(o);
    if (*evc) return cmd_ev(o);
    if (*form) return cmd_form(o);
    if (*act) return cmd_act(o);
    if (*lt) return cmd_lt_basis(o);
    if (*dc) return cmd_dual_canonical(o);
    if (*gram) return cmd_gram(o);
    if (*cartan) return cmd_cartan(o);
    if (*verify) {
      if (!o.relations && !o.evaluators && !o.howe && !o.blocks)
        throw Error(ErrorKind::InvalidInput, "verify needs at least one of --relations --evaluators --howe --blocks");
      return cmd_verify(o);
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.is_internal() ? 3 : 2;
  } catch (const json::exception& e) {
    std::cerr << "INVALID-INPUT: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
