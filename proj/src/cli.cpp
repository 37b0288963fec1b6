#include "resichain/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "resichain/amalgamation.hpp"
#include "resichain/classification.hpp"
#include "resichain/constructors.hpp"
#include "resichain/decomposition.hpp"
#include "resichain/error.hpp"
#include "resichain/galatos.hpp"
#include "resichain/json_io.hpp"
#include "resichain/morphisms.hpp"
#include "resichain/pointed.hpp"
#include "resichain/verify.hpp"
#include "resichain/words.hpp"

namespace resichain::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Context {
  std::istream& in;
  std::ostream& out;
  std::string format;
  int jobs = 1;
  std::uint64_t seed = 1;
  bool stdin_used = false;
};

Json read_stdin(Context& ctx) {
  if (ctx.stdin_used) throw UsageError("standard input can only be read once");
  ctx.stdin_used = true;
  return Json::parse(ctx.in);
}

// "-" or empty reads stdin; an existing path is read as JSON; text starting
// with { or [ is JSON; anything else is a constructor string.
Json load_json(Context& ctx, const std::string& arg) {
  if (arg.empty() || arg == "-") return read_stdin(ctx);
  if (arg.front() == '{' || arg.front() == '[') return Json::parse(arg);
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream file(arg);
    return Json::parse(file);
  }
  return Json(arg);
}

FiniteChain load_chain(Context& ctx, const std::string& arg) { return chain_from_json(load_json(ctx, arg)); }

std::vector<FiniteChain> load_chains(Context& ctx, const std::vector<std::string>& args) {
  std::vector<FiniteChain> out;
  auto add = [&](const Json& j) {
    if (j.is_array() || (j.is_object() && j.contains("generators")))
      for (auto& c : chains_from_json(j)) out.push_back(std::move(c));
    else
      out.push_back(chain_from_json(j));
  };
  if (args.empty()) add(read_stdin(ctx));
  for (auto const& a : args) add(load_json(ctx, a));
  return out;
}

std::vector<PointedChain> load_pointed_pool(Context& ctx, const std::string& arg) {
  std::vector<PointedChain> pool;
  std::error_code ec;
  if (std::filesystem::is_directory(arg, ec)) {
    std::vector<std::filesystem::path> files;
    for (auto const& entry : std::filesystem::directory_iterator(arg))
      if (entry.path().extension() == ".json") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (auto const& f : files) {
      std::ifstream file(f);
      pool.push_back(pointed_from_json(Json::parse(file)));
    }
    return pool;
  }
  auto const j = load_json(ctx, arg);
  if (!j.is_array()) throw Error("ParseError", "a pointed pool is a directory or a JSON array");
  for (auto const& x : j) pool.push_back(pointed_from_json(x));
  return pool;
}

Element element_of(const FiniteChain& chain, const std::string& token) {
  if (auto x = chain.find_label(token)) return *x;
  try {
    std::size_t used = 0;
    int const v = std::stoi(token, &used);
    if (used == token.size() && v >= 0 && v < chain.size()) return v;
  } catch (const std::logic_error&) {
  }
  throw Error("UnknownElement", "no element '" + token + "'");
}

Json index_json(const Index& i) {
  if (i >= std::numeric_limits<long long>::min() && i <= std::numeric_limits<long long>::max())
    return i.convert_to<long long>();
  return i.str();
}

void print_table(std::ostream& out, const Json& j, const std::string& indent) {
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto flat = [&](const Json& v) {
    if (!v.is_array()) return false;
    for (auto const& x : v)
      if (x.is_structured()) return false;
    return true;
  };
  if (j.is_object()) {
    for (auto const& [key, v] : j.items()) {
      if (!v.is_structured()) {
        out << indent << key << ": " << scalar(v) << '\n';
      } else if (flat(v)) {
        out << indent << key << ":";
        for (auto const& x : v) out << ' ' << scalar(x);
        out << '\n';
      } else {
        out << indent << key << ":\n";
        print_table(out, v, indent + "  ");
      }
    }
  } else if (j.is_array()) {
    for (auto const& v : j) {
      if (!v.is_structured() || flat(v)) {
        out << indent << "-";
        if (v.is_structured())
          for (auto const& x : v) out << ' ' << scalar(x);
        else
          out << ' ' << scalar(v);
        out << '\n';
      } else {
        out << indent << "-\n";
        print_table(out, v, indent + "  ");
      }
    }
  } else {
    out << indent << scalar(j) << '\n';
  }
}

void emit(Context& ctx, const Json& j) {
  if (ctx.format == "table")
    print_table(ctx.out, j, "");
  else
    ctx.out << j.dump() << '\n';
}

void show_table(std::ostream& out, const FiniteChain& c) {
  std::size_t width = 1;
  for (Element x = 0; x < c.size(); ++x) width = std::max(width, c.label(x).size());
  auto cell = [&](const std::string& s) { return std::string(width - s.size() + 1, ' ') + s; };
  out << "size " << c.size() << ", unit " << c.label(c.unit()) << '\n';
  out << std::string(width + 1, ' ') << " |";
  for (Element y = 0; y < c.size(); ++y) out << cell(c.label(y));
  out << '\n' << std::string(width + 3 + (width + 1) * static_cast<std::size_t>(c.size()), '-') << '\n';
  for (Element x = 0; x < c.size(); ++x) {
    out << cell(c.label(x)) << " |";
    for (Element y = 0; y < c.size(); ++y) out << cell(c.label(c.mult(x, y)));
    out << '\n';
  }
}

Json labels_of(const FiniteChain& c, const std::vector<Element>& xs) {
  Json j = Json::array();
  for (Element x : xs) j.push_back(c.label(x));
  return j;
}

Json predicates_json(const ChainPredicateReport& p) {
  return {{"commutative", p.commutative},
          {"idempotent", p.idempotent},
          {"star_involutive", p.star_involutive},
          {"admissible", p.admissible}};
}

Json suite_json(const SuiteResult& r) {
  return {{"suite", r.name}, {"pass", r.pass}, {"fail", r.fail}, {"failures", r.failures}};
}

Json violation_json(const RuleViolation& v) {
  Json j = {{"rule", v.rule}, {"premise", v.premise}, {"missing", v.missing}};
  if (v.span) j["span"] = to_json(*v.span);
  return j;
}

Derived parse_derived(const std::string& op) {
  if (op == "ell") return Derived::Ell;
  if (op == "r") return Derived::R;
  if (op == "star") return Derived::Star;
  throw UsageError("unknown unary operation '" + op + "'");
}

void need(const std::vector<std::string>& args, std::size_t n, const std::string& usage) {
  if (args.size() != n) throw UsageError("usage: " + usage);
}

int words_verb(Context& ctx, const std::vector<std::string>& args) {
  if (args.empty()) throw UsageError("usage: words subword|leq|minimal|factor ...");
  auto const& op = args[0];
  if (op == "subword") {
    need(args, 3, "words subword BITS WORD");
    emit(ctx, {{"subword", is_subword(FiniteWord(args[1]), SetSpec::parse(args[2]))}});
  } else if (op == "leq") {
    need(args, 3, "words leq WORD WORD");
    emit(ctx, {{"leq", preorder_leq(SetSpec::parse(args[1]), SetSpec::parse(args[2]))}});
  } else if (op == "minimal") {
    need(args, 2, "words minimal WORD");
    auto const cert = is_minimal(SetSpec::parse(args[1]));
    Json j = {{"minimal", cert.minimal}, {"recurrence_slack", nullptr}, {"strictly_below", nullptr}};
    if (cert.recurrence_slack) j["recurrence_slack"] = *cert.recurrence_slack;
    if (cert.strictly_below) j["strictly_below"] = cert.strictly_below->to_string();
    emit(ctx, j);
  } else if (op == "factor") {
    need(args, 4, "words factor WORD START LENGTH");
    emit(ctx, {{"factor", SetSpec::parse(args[1]).factor(Index(args[2]), std::stoul(args[3]))}});
  } else {
    throw UsageError("unknown words operation '" + op + "'");
  }
  return 0;
}

int as_op_verb(Context& ctx, const std::vector<std::string>& args, int depth) {
  if (args.size() < 3) throw UsageError("usage: as-op SET OP X [Y]");
  auto const s = SetSpec::parse(args[0]);
  auto const op = args[1] == "mul" ? std::string("mult") : args[1];
  auto const x = ASElement::parse(args[2]);
  bool const binary = op == "mult" || op == "ldiv" || op == "rdiv" || op == "compare";
  need(args, binary ? 4 : 3, binary ? "as-op SET " + op + " X Y" : "as-op SET " + op + " X");
  if (op == "reach") {
    auto const r = generated_reach(s, x, depth);
    Json elems = Json::array();
    for (auto const& e : r.elements) elems.push_back(e.to_string());
    auto range = [](const std::optional<std::pair<Index, Index>>& p) {
      return p ? Json::array({index_json(p->first), index_json(p->second)}) : Json(nullptr);
    };
    emit(ctx, {{"count", r.elements.size()},
               {"elements", elems},
               {"a_range", range(r.a_range)},
               {"b_range", range(r.b_range)},
               {"a_contiguous", r.a_contiguous},
               {"b_contiguous", r.b_contiguous}});
    return 0;
  }
  if (!binary) {
    emit(ctx, {{"value", as_unary(s, x, parse_derived(op)).to_string()}});
    return 0;
  }
  auto const y = ASElement::parse(args[3]);
  if (op == "compare") {
    auto const c = as_compare(x, y);
    emit(ctx, {{"order", c < 0 ? -1 : c > 0 ? 1 : 0}});
  } else if (op == "mult") {
    emit(ctx, {{"value", as_mult(s, x, y).to_string()}});
  } else {
    emit(ctx, {{"value", as_residual(s, x, y, op == "ldiv" ? Side::Left : Side::Right).to_string()}});
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite residuated chains: construction, morphisms, decomposition and amalgamation."};
  app.name("resichain");
  app.require_subcommand(1);
  app.fallthrough();

  Context ctx{in, out, "", 1, 1};
  app.add_option("--format", ctx.format, "json or table")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--jobs", ctx.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", ctx.seed, "seed for randomized suites");

  std::string chain_arg, other_arg, side = "left", cls_arg, f_arg;
  std::vector<std::string> rest;
  int number = 0, bound = 0, max_size = 5, depth = 8;
  bool flag_json = false, flag_count = false, comm = false, idem = false, star = false, one_sided = false,
       constructive = false, list = false;

  auto* make = app.add_subcommand("make", "build a chain from a constructor string");
  make->add_option("spec", chain_arg, "go:N, com:M,N or a +-joined sum")->required();

  auto* show = app.add_subcommand("show", "print a chain");
  show->add_option("chain", chain_arg);
  show->add_flag("--json", flag_json);

  auto* check = app.add_subcommand("check", "report structural predicates");
  check->add_option("chain", chain_arg);

  auto* residual_cmd = app.add_subcommand("residual", "x\\y (left) or y/x (right)");
  residual_cmd->add_option("chain", chain_arg)->required();
  residual_cmd->add_option("operands", rest, "x y")->expected(2)->required();
  residual_cmd->add_option("--side", side)->check(CLI::IsMember({"left", "right"}));

  auto* decompose_cmd = app.add_subcommand("decompose", "nested-sum normal form");
  decompose_cmd->add_option("chain", chain_arg);

  auto* embed = app.add_subcommand("embed", "embeddings A -> B");
  embed->add_option("A", chain_arg)->required();
  embed->add_option("B", other_arg)->required();
  embed->add_flag("--count", flag_count);

  auto* homs = app.add_subcommand("homs", "homomorphisms A -> B");
  homs->add_option("A", chain_arg)->required();
  homs->add_option("B", other_arg)->required();
  homs->add_flag("--count", flag_count);

  auto* congruences_cmd = app.add_subcommand("congruences", "all congruences");
  congruences_cmd->add_option("chain", chain_arg);

  auto* quotient_cmd = app.add_subcommand("quotient", "quotient by the congruence with kernel [lo, hi]");
  quotient_cmd->add_option("chain", chain_arg)->required();
  quotient_cmd->add_option("kernel", rest, "lo hi")->expected(2)->required();

  auto* enumerate = app.add_subcommand("enumerate", "chains of size n up to isomorphism");
  enumerate->add_option("n", number)->required();
  enumerate->add_flag("--commutative", comm);
  enumerate->add_flag("--idempotent", idem);
  enumerate->add_flag("--star-involutive", star);
  enumerate->add_flag("--count", flag_count);

  auto* amalgamate = app.add_subcommand("amalgamate", "amalgam for a span {A,B,C,iB,iC}");
  amalgamate->add_option("span", chain_arg);
  amalgamate->add_option("--class", cls_arg, "canonical class, e.g. fin:1,0,1");
  amalgamate->add_option("--bound", bound, "largest candidate size (default |B|+|C|)");
  amalgamate->add_flag("--one-sided", one_sided, "jC need only be a homomorphism");
  amalgamate->add_flag("--constructive", constructive);

  auto* classify_cmd = app.add_subcommand("classify", "identify the HS-closure of the generators");
  classify_cmd->add_option("generators", rest);

  auto* ap = app.add_subcommand("ap", "amalgamation verdict for a class");
  ap->add_option("generators", rest);
  ap->add_option("--class", cls_arg);

  auto* words = app.add_subcommand("words", "bi-infinite word operations");
  words->add_option("args", rest)->required();

  auto* as_op = app.add_subcommand("as-op", "operations of A_S");
  as_op->add_option("args", rest, "[SET] OP X [Y]")->required();
  as_op->add_option("--set", other_arg, "per:BITS@PHASE or fin:{...}");
  as_op->add_option("--depth", depth);

  auto* pcondition = app.add_subcommand("pcondition", "condition of a pointed chain");
  pcondition->add_option("chain", chain_arg);
  pcondition->add_option("--f", f_arg, "label or index of f");

  auto* ppartition = app.add_subcommand("ppartition", "partition of all pointed chains");
  ppartition->add_option("pool", chain_arg, "directory of pointed chain files, or a JSON array");
  ppartition->add_option("--max-size", max_size);

  auto* verify = app.add_subcommand("verify", "run property suites");
  verify->add_option("suites", rest);
  verify->add_option("--max-size", max_size);
  verify->add_flag("--list", list);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (make->parsed()) {
      emit(ctx, to_json(make_from_spec(chain_arg)));
    } else if (show->parsed()) {
      auto const c = load_chain(ctx, chain_arg);
      if (flag_json || ctx.format == "json")
        out << to_json(c).dump() << '\n';
      else
        show_table(out, c);
    } else if (check->parsed()) {
      emit(ctx, predicates_json(load_chain(ctx, chain_arg).predicates()));
    } else if (residual_cmd->parsed()) {
      auto const c = load_chain(ctx, chain_arg);
      Element const v = residual(c, element_of(c, rest[0]), element_of(c, rest[1]),
                                 side == "left" ? Side::Left : Side::Right);
      emit(ctx, {{"index", v}, {"label", c.label(v)}});
    } else if (decompose_cmd->parsed()) {
      auto const c = load_chain(ctx, chain_arg);
      auto const sig = decompose(c);
      Json pairs = Json::array();
      for (auto [m, n] : sig.pairs) pairs.push_back({m, n});
      emit(ctx, {{"signature", sig.to_string()},
                 {"pairs", pairs},
                 {"p", sig.p},
                 {"skeleton", labels_of(c, sugihara_skeleton(c))}});
    } else if (embed->parsed() || homs->parsed()) {
      auto const a = load_chain(ctx, chain_arg);
      auto const b = load_chain(ctx, other_arg);
      std::vector<std::vector<Element>> images;
      std::size_t count = 0;
      ImageVisitor visit = [&](const std::vector<Element>& image) {
        ++count;
        if (!flag_count) images.push_back(image);
        return true;
      };
      if (embed->parsed())
        for_each_embedding(a, b, visit);
      else
        for_each_homomorphism(a, b, visit);
      Json j = {{"count", count}};
      if (!flag_count) j[embed->parsed() ? "embeddings" : "homomorphisms"] = images;
      emit(ctx, j);
    } else if (congruences_cmd->parsed()) {
      auto const c = load_chain(ctx, chain_arg);
      Json list_json = Json::array();
      for (auto const& theta : congruences(c)) {
        Json blocks = Json::array();
        for (auto const& b : theta.blocks) blocks.push_back(labels_of(c, b));
        list_json.push_back({{"kernel", labels_of(c, {theta.kernel_class.front(), theta.kernel_class.back()})},
                             {"blocks", blocks}});
      }
      emit(ctx, {{"count", list_json.size()}, {"congruences", list_json}});
    } else if (quotient_cmd->parsed()) {
      auto const c = load_chain(ctx, chain_arg);
      auto const q = quotient(c, congruence_from_kernel(c, element_of(c, rest[0]), element_of(c, rest[1])));
      emit(ctx, {{"chain", to_json(q.chain)}, {"projection", q.projection.image}});
    } else if (enumerate->parsed()) {
      auto const chains = enumerate_chains(number, {comm, idem, star}, std::nullopt, ctx.jobs);
      Json j = {{"n", number}, {"count", chains.size()}};
      if (!flag_count) {
        j["chains"] = Json::array();
        for (auto const& c : chains) j["chains"].push_back(to_json(c));
      }
      emit(ctx, j);
    } else if (amalgamate->parsed()) {
      auto const span = span_from_json(load_json(ctx, chain_arg));
      if (constructive) {
        auto const r = amalgamate_components(span);
        emit(ctx, {{"outcome", "Found"}, {"amalgam", to_json(r)}, {"verified", verify_amalgam(span, r)}});
      } else {
        auto const membership = cls_arg.empty()
                                    ? membership_from_predicate([](const FiniteChain&) { return true; })
                                    : CanonicalClass::parse(cls_arg).membership();
        int const limit = bound > 0 ? bound : span.b.size() + span.c.size();
        auto const r = find_amalgam(span, membership, limit, one_sided, ctx.jobs);
        Json j = {{"outcome", to_string(r.outcome)},
                  {"complete", r.complete},
                  {"candidates_examined", r.candidates_examined},
                  {"amalgam", nullptr}};
        if (r.amalgam) j["amalgam"] = to_json(*r.amalgam);
        emit(ctx, j);
      }
    } else if (classify_cmd->parsed()) {
      auto const k = hs_closure(load_chains(ctx, rest));
      auto const cls = classify(k);
      if (cls) {
        emit(ctx, {{"class", cls->to_string()}, {"ap", true}});
      } else {
        auto const v = ap_verdict(k, ctx.jobs);
        Json audit = Json::array();
        for (auto const& r : v.audit) audit.push_back(violation_json(r));
        emit(ctx, {{"class", nullptr},
                   {"ap", false},
                   {"audit", audit},
                   {"witness", v.witness ? to_json(*v.witness) : Json(nullptr)}});
      }
    } else if (ap->parsed()) {
      if (!cls_arg.empty()) {
        if (!rest.empty()) throw UsageError("give either --class or generators");
        auto const cls = CanonicalClass::parse(cls_arg);
        Json j = {{"class", cls.to_string()}, {"display", cls.display()}, {"ap", true}, {"finite", cls.finite()}};
        emit(ctx, j);
      } else {
        auto const v = ap_verdict(hs_closure(load_chains(ctx, rest)), ctx.jobs);
        Json audit = Json::array();
        for (auto const& r : v.audit) audit.push_back(violation_json(r));
        emit(ctx, {{"ap", v.has_ap},
                   {"class", v.cls ? Json(v.cls->to_string()) : Json(nullptr)},
                   {"audit", audit},
                   {"witness", v.witness ? to_json(*v.witness) : Json(nullptr)},
                   {"refuted_complete", v.refuted_complete}});
      }
    } else if (words->parsed()) {
      return words_verb(ctx, rest);
    } else if (as_op->parsed()) {
      if (!other_arg.empty()) rest.insert(rest.begin(), other_arg);
      return as_op_verb(ctx, rest, depth);
    } else if (pcondition->parsed()) {
      auto const a = [&] {
        if (f_arg.empty()) return pointed_from_json(load_json(ctx, chain_arg));
        auto const c = load_chain(ctx, chain_arg);
        return PointedChain::make(c, element_of(c, f_arg));
      }();
      auto const cond = condition_of(a);
      emit(ctx, {{"condition", to_string(cond)},
                 {"seed", to_json(seed_algebra(cond))},
                 {"generated", to_json(generated_by_f(a))}});
    } else if (ppartition->parsed()) {
      auto const pool = chain_arg.empty() ? all_pointed_chains(max_size) : load_pointed_pool(ctx, chain_arg);
      Json counts = Json::object();
      for (auto c : all_conditions()) counts[to_string(c)] = 0;
      for (auto const& [c, members] : partition(pool)) counts[to_string(c)] = members.size();
      emit(ctx, {{"max_size", max_size},
                 {"total", pool.size()},
                 {"counts", counts},
                 {"cross_condition_embeddings", cross_condition_embeddings(pool)}});
    } else if (verify->parsed()) {
      if (list) {
        emit(ctx, suite_names());
        return 0;
      }
      if (rest.empty()) throw UsageError("usage: verify SUITE... | all | --list");
      std::vector<std::string> names = rest;
      if (names.size() == 1 && names[0] == "all") names = suite_names();
      Json results = Json::array();
      bool ok = true;
      for (auto const& name : names) {
        auto const r = run_suite(name, max_size, ctx.seed);
        ok = ok && r.fail == 0;
        results.push_back(suite_json(r));
      }
      emit(ctx, results.size() == 1 ? results[0] : results);
      return ok ? 0 : 1;
    }
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::string msg = e.what();
    out << Json{{"error", e.code()}, {"witness", e.witness()}, {"message", msg.substr(e.code().size() + 2)}}.dump()
        << '\n';
    return 1;
  } catch (const nlohmann::json::exception& e) {
    out << Json{{"error", "ParseError"}, {"witness", Json::array()}, {"message", e.what()}}.dump() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    out << Json{{"error", "ParseError"}, {"witness", Json::array()}, {"message", e.what()}}.dump() << '\n';
    return 1;
  } catch (const std::out_of_range& e) {
    out << Json{{"error", "ParseError"}, {"witness", Json::array()}, {"message", e.what()}}.dump() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace resichain::cli
