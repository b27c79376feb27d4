#include <iostream>
#include <string>
#include <vector>

#include "cfinj/chain.hpp"
#include "cfinj/congruence.hpp"
#include "cfinj/element.hpp"
#include "cfinj/expr.hpp"
#include "cfinj/green.hpp"
#include "cfinj/oracle.hpp"

namespace {

using namespace cfinj;

int usage(std::ostream& os) {
  os << "usage: cfinj <subcommand> [args]\n"
        "  eval <expr>                      normal form of an expression\n"
        "  apply <expr> <n>                 value at n, or _\n"
        "  stats <expr>                     complement sizes and index\n"
        "  complements <expr>               domain and range complements\n"
        "  classify <expr>                  unit/idempotent/general flags\n"
        "  leq <expr> <expr>                natural order on idempotents\n"
        "  green <R|L|H|D|J> <expr> <expr>  Green relation test\n"
        "  hclass <set> <set>               order-preserving bijection\n"
        "                                   between complements\n"
        "  dwitness <expr> <expr>           D-class witness\n"
        "  factor <expr> <expr>             gamma, delta with g*a*d = b\n"
        "  sepidem <expr>                   idempotent separating a unit\n"
        "                                   from the identity\n"
        "  index <expr>                     index homomorphism value\n"
        "  dequiv <expr> <expr>             equal-index test\n"
        "  sigma <expr> <expr>              least group congruence witness\n"
        "  unitrep <expr>                   congruent unit and idempotent\n"
        "  solve <left|right> <expr> <expr> all translation solutions\n"
        "  covers <expr> <expr>             single-step order test\n"
        "  chain gens start=<expr> prefix=[..]    bicyclic generators\n"
        "  chain elem <i> start=<expr> prefix=[..] i-th chain member\n"
        "  chain translate <count> <expr> start=<expr> prefix=[..]\n"
        "                                   translated descending chain\n"
        "  embed <expr> <expr> ...          maximal chain through the\n"
        "                                   given idempotents\n"
        "  window <expr> <W>                values on [0, W)\n"
        "  oracle check <expr> <expr> <W>   pointwise composition check\n"
        "  oracle enum <set> <set>          partial injections, one per line\n"
        "  oracle solve <left|right> <expr> <expr> [bound]\n"
        "                                   brute-force translation solutions\n";
  return 1;
}

CofiniteInjection eval_arg(std::string const& text) {
  return eval(parse(text));
}

integer int_arg(std::string const& text) {
  std::size_t used = 0;
  integer out = 0;
  try {
    out = std::stoll(text, &used);
  } catch (std::exception const&) {
    throw ValidationError("expected an integer, got '" + text + "'");
  }
  if (used != text.size()) {
    throw ValidationError("expected an integer, got '" + text + "'");
  }
  return out;
}

//! Parses "{a,b,...}" (or "{}") into a set.
FiniteSet set_arg(std::string const& text) {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
    throw ValidationError("expected a set like {0,1}, got '" + text + "'");
  }
  std::vector<integer> points;
  std::string const body = text.substr(1, text.size() - 2);
  std::size_t start = 0;
  while (start < body.size()) {
    std::size_t const comma = body.find(',', start);
    std::size_t const end = comma == std::string::npos ? body.size() : comma;
    points.push_back(int_arg(body.substr(start, end - start)));
    start = end + 1;
  }
  return FiniteSet(std::move(points));
}

ChainSpec chain_args(std::vector<std::string> const& args, std::size_t at) {
  if (args.size() != at + 2 || args[at].rfind("start=", 0) != 0 ||
      args[at + 1].rfind("prefix=[", 0) != 0 || args[at + 1].back() != ']') {
    throw ValidationError("expected start=<expr> prefix=[a,b,...]");
  }
  CofiniteInjection start = eval_arg(args[at].substr(6));
  std::string const body =
      args[at + 1].substr(8, args[at + 1].size() - 9);
  std::vector<integer> prefix;
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t const comma = body.find(',', pos);
    std::size_t const end = comma == std::string::npos ? body.size() : comma;
    prefix.push_back(int_arg(body.substr(pos, end - pos)));
    pos = end + 1;
  }
  return ChainSpec(std::move(start), std::move(prefix));
}

void print_bool(bool value) { std::cout << (value ? "true" : "false") << "\n"; }

GreenRelation relation_arg(std::string const& name) {
  if (name == "R") return GreenRelation::R;
  if (name == "L") return GreenRelation::L;
  if (name == "H") return GreenRelation::H;
  if (name == "D") return GreenRelation::D;
  if (name == "J") return GreenRelation::J;
  throw ValidationError("unknown Green relation '" + name +
                        "', expected R, L, H, D or J");
}

Side side_arg(std::string const& name) {
  if (name == "left") return Side::left;
  if (name == "right") return Side::right;
  throw ValidationError("unknown side '" + name +
                        "', expected left or right");
}

void require_args(std::vector<std::string> const& args, std::size_t count) {
  if (args.size() != count) {
    throw ValidationError("expected " + std::to_string(count) +
                          " argument(s), got " + std::to_string(args.size()));
  }
}

int run_chain(std::vector<std::string> const& args) {
  if (args.empty()) {
    throw ValidationError("expected gens, elem or translate");
  }
  if (args[0] == "gens") {
    BicyclicPair const pair = bicyclic_generators(chain_args(args, 1));
    std::cout << "p=" << pair.p << "\n"
              << "q=" << pair.q << "\n"
              << "unit=" << pair.unit << "\n";
    return 0;
  }
  if (args[0] == "elem") {
    if (args.size() != 4) {
      throw ValidationError(
          "expected: chain elem <i> start=<expr> prefix=[..]");
    }
    std::cout << chain_element(chain_args(args, 2), int_arg(args[1])) << "\n";
    return 0;
  }
  if (args[0] == "translate") {
    if (args.size() != 5) {
      throw ValidationError(
          "expected: chain translate <count> <expr> start=<expr> "
          "prefix=[..]");
    }
    for (CofiniteInjection const& e : translate_chain(
             eval_arg(args[2]), chain_args(args, 3), int_arg(args[1]))) {
      std::cout << e << "\n";
    }
    return 0;
  }
  throw ValidationError("unknown chain subcommand '" + args[0] + "'");
}

int run_oracle(std::vector<std::string> const& args) {
  if (args.empty()) {
    throw ValidationError("expected check, enum or solve");
  }
  if (args[0] == "check") {
    require_args(args, 4);
    print_bool(oracle::oracle_compose_check(eval_arg(args[1]),
                                            eval_arg(args[2]),
                                            int_arg(args[3])));
    return 0;
  }
  if (args[0] == "enum") {
    require_args(args, 3);
    for (auto const& assignment : oracle::enumerate_partial_injections(
             set_arg(args[1]), set_arg(args[2]))) {
      std::cout << "{";
      for (std::size_t i = 0; i < assignment.size(); ++i) {
        if (i != 0) {
          std::cout << ", ";
        }
        std::cout << assignment[i].first << "->" << assignment[i].second;
      }
      std::cout << "}\n";
    }
    return 0;
  }
  if (args[0] == "solve") {
    if (args.size() != 4 && args.size() != 5) {
      throw ValidationError(
          "expected: oracle solve <left|right> <expr> <expr> [bound]");
    }
    integer const bound = args.size() == 5 ? int_arg(args[4]) : 4;
    for (CofiniteInjection const& s : oracle::brute_force_solutions(
             side_arg(args[1]), eval_arg(args[2]), eval_arg(args[3]),
             bound)) {
      std::cout << s << "\n";
    }
    return 0;
  }
  throw ValidationError("unknown oracle subcommand '" + args[0] + "'");
}

int run(std::string const& command, std::vector<std::string> const& args) {
  if (command == "eval") {
    require_args(args, 1);
    std::cout << eval_arg(args[0]) << "\n";
    return 0;
  }
  if (command == "apply") {
    require_args(args, 2);
    auto const v = eval_arg(args[0]).apply(int_arg(args[1]));
    if (v) {
      std::cout << *v << "\n";
    } else {
      std::cout << "_\n";
    }
    return 0;
  }
  if (command == "stats") {
    require_args(args, 1);
    Stats const s = eval_arg(args[0]).stats();
    std::cout << "dbar=" << s.dbar << " rbar=" << s.rbar
              << " index=" << s.index << "\n";
    return 0;
  }
  if (command == "complements") {
    require_args(args, 1);
    CofiniteInjection const a = eval_arg(args[0]);
    std::cout << "dom=" << a.domain_complement()
              << " ran=" << a.range_complement() << "\n";
    return 0;
  }
  if (command == "classify") {
    require_args(args, 1);
    ElementClass const c = eval_arg(args[0]).classify();
    std::pair<bool, char const*> const flags[] = {
        {c.unit, "unit"},
        {c.finitary_unit, "finitary_unit"},
        {c.idempotent, "idempotent"},
        {c.general, "general"}};
    std::string out;
    for (auto const& [set, name] : flags) {
      if (set) {
        out += out.empty() ? "" : " ";
        out += name;
      }
    }
    std::cout << out << "\n";
    return 0;
  }
  if (command == "leq") {
    require_args(args, 2);
    print_bool(natural_leq(eval_arg(args[0]), eval_arg(args[1])));
    return 0;
  }
  if (command == "green") {
    require_args(args, 3);
    print_bool(
        related(relation_arg(args[0]), eval_arg(args[1]), eval_arg(args[2])));
    return 0;
  }
  if (command == "hclass") {
    require_args(args, 2);
    std::cout << h_class_element(set_arg(args[0]), set_arg(args[1])) << "\n";
    return 0;
  }
  if (command == "dwitness") {
    require_args(args, 2);
    std::cout << d_witness(eval_arg(args[0]), eval_arg(args[1])) << "\n";
    return 0;
  }
  if (command == "factor") {
    require_args(args, 2);
    auto const [gamma, delta] =
        simple_factorization(eval_arg(args[0]), eval_arg(args[1]));
    std::cout << "gamma=" << gamma << "\n" << "delta=" << delta << "\n";
    return 0;
  }
  if (command == "sepidem") {
    require_args(args, 1);
    auto const [eps, x0] = separating_idempotent(eval_arg(args[0]));
    std::cout << "eps=" << eps << "\n" << "x0=" << x0 << "\n";
    return 0;
  }
  if (command == "index") {
    require_args(args, 1);
    std::cout << index_hom(eval_arg(args[0])) << "\n";
    return 0;
  }
  if (command == "dequiv") {
    require_args(args, 2);
    print_bool(d_equiv(eval_arg(args[0]), eval_arg(args[1])));
    return 0;
  }
  if (command == "sigma") {
    require_args(args, 2);
    auto const witness = sigma_related(eval_arg(args[0]), eval_arg(args[1]));
    if (witness) {
      std::cout << *witness << "\n";
    } else {
      std::cout << "not related\n";
    }
    return 0;
  }
  if (command == "unitrep") {
    require_args(args, 1);
    auto const [alpha, eps] = unit_representative(eval_arg(args[0]));
    std::cout << "alpha=" << alpha << "\n" << "eps=" << eps << "\n";
    return 0;
  }
  if (command == "solve") {
    require_args(args, 3);
    for (CofiniteInjection const& s : solve_translation(
             side_arg(args[0]), eval_arg(args[1]), eval_arg(args[2]))) {
      std::cout << s << "\n";
    }
    return 0;
  }
  if (command == "covers") {
    require_args(args, 2);
    print_bool(covers(eval_arg(args[0]), eval_arg(args[1])));
    return 0;
  }
  if (command == "chain") {
    return run_chain(args);
  }
  if (command == "embed") {
    if (args.empty()) {
      throw ValidationError("expected at least one idempotent");
    }
    std::vector<CofiniteInjection> members;
    members.reserve(args.size());
    for (std::string const& arg : args) {
      members.push_back(eval_arg(arg));
    }
    auto const [spec, pair] = embed_finite_chain(members);
    std::cout << spec.to_string() << "\n"
              << "p=" << pair.p << "\n"
              << "q=" << pair.q << "\n"
              << "unit=" << pair.unit << "\n";
    return 0;
  }
  if (command == "window") {
    require_args(args, 2);
    std::cout << oracle::window_eval(eval_arg(args[0]), int_arg(args[1]))
                     .to_string()
              << "\n";
    return 0;
  }
  if (command == "oracle") {
    return run_oracle(args);
  }
  std::cerr << "error: unknown subcommand '" << command << "'\n";
  return usage(std::cerr);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    return usage(std::cerr);
  }
  std::vector<std::string> args;
  for (int i = 2; i < argc; ++i) {
    args.emplace_back(argv[i]);
  }
  try {
    return run(argv[1], args);
  } catch (ParseError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (ValidationError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (CfinjError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
