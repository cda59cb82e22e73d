#include "staircase/cli.hpp"

#include <algorithm>
#include <sstream>

#include <CLI11.hpp>

#include "staircase/chains.hpp"
#include "staircase/decomposition.hpp"
#include "staircase/fibers.hpp"
#include "staircase/hilbert.hpp"
#include "staircase/io.hpp"
#include "staircase/posetlab.hpp"
#include "staircase/sagbi.hpp"

namespace staircase::cli {

using nlohmann::json;

namespace {

struct Outcome {
  json payload;
  std::optional<bool> passed;
  std::string summary;
};

json vectors_json(std::span<const ExponentVector> vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(io::to_json(v));
  return out;
}

json partition_json(const Partition& p) { return json(p); }

std::vector<std::int64_t> parse_signed_list(const std::string& text, const std::string& what) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    try {
      out.push_back(std::stoll(item, &used));
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw io::ParseError(what + ": not an integer: \"" + item + "\"");
  }
  if (out.empty()) throw io::ParseError(what + ": empty list");
  return out;
}

// ---- ideal ---------------------------------------------------------------

struct IdealArgs {
  std::string ideal_file;
  std::string other_file;
  std::string op = "minimalize";
  std::string monomial;
  std::int64_t bound = -1;
};

Outcome run_ideal(const IdealArgs& a) {
  const auto ideal = io::ideal_from_json(io::load_file(a.ideal_file), a.ideal_file + ":$");
  auto other = [&] {
    if (a.other_file.empty()) throw io::ParseError("--op " + a.op + " needs -J");
    return io::ideal_from_json(io::load_file(a.other_file), a.other_file + ":$");
  };
  auto monomial = [&] {
    if (a.monomial.empty()) throw io::ParseError("--op " + a.op + " needs --monomial");
    return io::parse_vector(a.monomial, "--monomial");
  };
  if (a.op == "minimalize") return {io::to_json(ideal), {}, to_string(ideal)};
  if (a.op == "member") {
    const bool r = member(ideal, monomial());
    return {{{"member", r}}, {}, r ? "member" : "not a member"};
  }
  if (a.op == "contains") {
    const bool r = contains(ideal, other());
    return {{{"contains", r}}, {}, r ? "J is contained in I" : "J is not contained in I"};
  }
  if (a.op == "sum") return {io::to_json(sum(ideal, other())), {}, "sum"};
  if (a.op == "intersect") return {io::to_json(intersect(ideal, other())), {}, "intersection"};
  if (a.op == "quotient") return {io::to_json(quotient(ideal, monomial())), {}, "quotient"};
  if (a.op == "artinian") {
    const bool r = is_artinian(ideal);
    return {{{"artinian", r}}, {}, r ? "artinian" : "not artinian"};
  }
  if (a.op == "standard") {
    const auto s = standard_monomials(ideal);
    return {vectors_json(s), {}, std::to_string(s.size()) + " standard monomials"};
  }
  if (a.op == "standard-up-to") {
    if (a.bound < 0) throw io::ParseError("--op standard-up-to needs --bound");
    const auto s = standard_monomials_up_to(ideal, a.bound);
    return {vectors_json(s), {}, std::to_string(s.size()) + " standard monomials"};
  }
  throw io::ParseError("--op: unknown operation \"" + a.op + "\"");
}

// ---- decompose -----------------------------------------------------------

struct DecomposeArgs {
  std::string ideal_file;
  std::string kind = "primary";
};

Outcome run_decompose(const DecomposeArgs& a) {
  const auto ideal = io::ideal_from_json(io::load_file(a.ideal_file), a.ideal_file + ":$");
  if (a.kind == "primary") {
    const auto comps = primary_decomposition(ideal);
    return {io::to_json(comps), {}, std::to_string(comps.size()) + " primary components"};
  }
  if (a.kind == "irreducible") {
    std::vector<PrimaryComponent> comps;
    for (auto& c : irreducible_decomposition(ideal)) comps.push_back({MonomialPrime::radical_of_irreducible(c), c});
    return {io::to_json(comps), {}, std::to_string(comps.size()) + " irreducible components"};
  }
  if (a.kind == "primes") {
    json out = json::array();
    const auto primes = associated_primes(ideal);
    for (const auto& p : primes) out.push_back({{"tau", p.tau()}, {"vars", p.variables()}});
    return {out, {}, std::to_string(primes.size()) + " associated primes"};
  }
  throw io::ParseError("--kind: unknown value \"" + a.kind + "\"");
}

// ---- hilbert -------------------------------------------------------------

struct HilbertArgs {
  std::string ideal_file;
  std::string grading_file;
  std::int64_t table = -1;
};

Outcome run_hilbert(const HilbertArgs& a) {
  const auto ideal = io::ideal_from_json(io::load_file(a.ideal_file), a.ideal_file + ":$");
  const auto grading = a.grading_file.empty()
                           ? Grading::fine(ideal.nvars())
                           : Grading(io::matrix_from_json(io::load_file(a.grading_file), a.grading_file + ":$"));
  require_same_dim(ideal.nvars(), grading.nvars(), "grading columns vs ideal variables");
  const auto fine = hilbert_numerator(ideal);
  json payload;
  payload["grading"] = io::to_json(grading.matrix());
  payload["numerator"] = io::to_json(a.grading_file.empty() ? fine : coarsen(fine, grading));
  if (a.table >= 0) {
    json table = json::array();
    for (const auto& b : monomials_up_to(grading.rank(), a.table)) {
      table.push_back(json::array({io::to_json(b), hilbert_function(ideal, grading, b)}));
    }
    payload["table"] = table;
  }
  return {payload, {}, std::to_string(payload["numerator"].size()) + " numerator terms"};
}

// ---- antichain / chain ---------------------------------------------------

struct FamilyArgs {
  std::string family_file;
  std::string op = "check";
  std::string pivot_file;
};

IdealFamily load_family(const std::string& file) {
  auto ideals = io::ideals_from_json(io::load_file(file), file + ":$");
  const std::size_t n = ideals.empty() ? 0 : ideals.front().nvars();
  return IdealFamily(n, std::move(ideals));
}

json pair_json(const std::optional<ComparablePair>& p) {
  return p ? json::array({p->sub, p->super}) : json(nullptr);
}

Outcome run_antichain(const FamilyArgs& a) {
  const auto family = load_family(a.family_file);
  if (a.op == "check" || a.op == "pair") {
    const auto pair = find_comparable_pair(family);
    return {{{"antichain", !pair.has_value()}, {"pair", pair_json(pair)}},
            {},
            pair ? "comparable pair found" : "antichain"};
  }
  if (a.op == "trace") {
    if (a.pivot_file.empty()) throw io::ParseError("--op trace needs --pivot");
    const auto pivot = io::ideal_from_json(io::load_file(a.pivot_file), a.pivot_file + ":$");
    const auto p = refine_by_standard_trace(family, pivot);
    return {{{"partition", partition_json(p)}}, {}, std::to_string(p.size()) + " blocks"};
  }
  if (a.op == "primes") {
    const auto p = group_by_associated_primes(family);
    return {{{"partition", partition_json(p)}}, {}, std::to_string(p.size()) + " blocks"};
  }
  throw io::ParseError("--op: unknown operation \"" + a.op + "\"");
}

Outcome run_chain(const FamilyArgs& a) {
  const auto family = load_family(a.family_file);
  const auto chain = extract_descending_chain(family);
  return {{{"chain", chain}, {"length", chain.size()}}, {}, "longest chain has " + std::to_string(chain.size()) + " members"};
}

// ---- fibers --------------------------------------------------------------

struct FiberArgs {
  std::string matrix_file;
  std::string degree;
  std::string split;
  std::string ideal_file;
  bool atomic = false;
};

FiberMatrix load_matrix(const std::string& file) {
  return io::matrix_from_json(io::load_file(file), file + ":$");
}

MonomialIdeal optional_ideal(const std::string& file, std::size_t nvars) {
  if (file.empty()) return MonomialIdeal::zero(nvars);
  auto m = io::ideal_from_json(io::load_file(file), file + ":$");
  require_same_dim(nvars, m.nvars(), "ideal variables vs matrix columns");
  return m;
}

Outcome run_fiber(const FiberArgs& a) {
  const auto mat = load_matrix(a.matrix_file);
  const auto b = io::parse_vector(a.degree, "-b");
  require_same_dim(mat.rows(), b.size(), "-b vs matrix rows");
  const auto m = optional_ideal(a.ideal_file, mat.cols());
  const auto f = make_fiber(mat, b);
  json payload{{"degree", io::to_json(b)}, {"points", vectors_json(f.points)}, {"vertices", vectors_json(f.vertices)}};
  if (!a.ideal_file.empty()) payload["ma_points"] = vectors_json(ma_fiber(m, mat, b));
  if (!a.split.empty()) {
    const auto b1 = io::parse_vector(a.split, "--split");
    require_same_dim(mat.rows(), b1.size(), "--split vs matrix rows");
    const auto b2 = b - b1;
    const auto lat = ma_decomposes(m, mat, b, b1, b2);
    payload["split"] = {{"b1", io::to_json(b1)},
                        {"b2", io::to_json(b2)},
                        {"minkowski", minkowski_decomposes(mat, b, b1, b2)},
                        {"lattice", lat.decomposes},
                        {"witness", lat.witness ? io::to_json(*lat.witness) : json(nullptr)}};
  }
  if (a.atomic) {
    payload["atomic"] = is_atomic(mat, b);
    payload["ma_atomic"] = is_ma_atomic(m, mat, b);
  }
  return {payload, {}, std::to_string(f.points.size()) + " points, " + std::to_string(f.vertices.size()) + " vertices"};
}

struct ScanArgs {
  std::string matrix_file;
  std::int64_t bound = 0;
  std::string mode = "vertex";
  std::string ideal_file;
  int workers = 0;
};

Outcome run_atomic_scan(const ScanArgs& a) {
  const auto mat = load_matrix(a.matrix_file);
  ScanOptions opts;
  if (a.mode == "vertex") {
    opts.mode = AtomicityMode::vertex;
  } else if (a.mode == "lattice") {
    opts.mode = AtomicityMode::lattice;
    opts.lattice_ideal = optional_ideal(a.ideal_file, mat.cols());
  } else {
    throw io::ParseError("--mode: expected vertex or lattice, got \"" + a.mode + "\"");
  }
  opts.workers = a.workers;
  const auto degrees = atomic_scan(mat, a.bound, opts);
  return {vectors_json(degrees), {}, std::to_string(degrees.size()) + " atomic degrees"};
}

struct SagbiArgs {
  std::string matrix_file;
  std::string coeffs;
  std::int64_t bound = 0;
};

Outcome run_sagbi(const SagbiArgs& a) {
  const auto mat = load_matrix(a.matrix_file);
  const auto c = parse_signed_list(a.coeffs, "--coeffs");
  json out = json::array();
  const auto gens = sagbi_generators(mat, c, a.bound);
  for (const auto& g : gens) out.push_back({{"k", g.coefficient.get_str()}, {"degree", io::to_json(g.degree)}});
  return {out, {}, std::to_string(gens.size()) + " generators"};
}

struct VertexIdealArgs {
  std::string matrix_file;
  std::int64_t bound = 0;
};

Outcome run_vertex_ideal(const VertexIdealArgs& a) {
  const auto mat = load_matrix(a.matrix_file);
  const auto standard = vertex_ideal_standard(mat, a.bound);
  const auto gens = vertex_ideal_gens_truncated(mat, a.bound);
  return {{{"standard", vectors_json(standard)}, {"gens", io::to_json(gens)["gens"]}},
          {},
          std::to_string(standard.size()) + " standard monomials, " + std::to_string(gens.num_gens()) + " generators"};
}

struct LiftArgs {
  std::string matrix_file;
  std::vector<std::string> degrees;
  std::int64_t bound = 0;
};

Outcome run_lift(const LiftArgs& a) {
  const auto mat = load_matrix(a.matrix_file);
  std::vector<Degree> degs;
  for (const auto& d : a.degrees) {
    degs.push_back(io::parse_vector(d, "--degree"));
    require_same_dim(mat.rows(), degs.back().size(), "--degree vs matrix rows");
  }
  const auto lifted = monoid_lift(mat, degs, a.bound);
  return {io::to_json(lifted), {}, to_string(lifted)};
}

// ---- posets --------------------------------------------------------------

struct PosetArgs {
  std::int64_t check_antichain = -1;
  std::int64_t chain_bound = -1;
};

Outcome run_posetx(const PosetArgs& a) {
  if ((a.check_antichain >= 0) == (a.chain_bound >= 0)) {
    throw io::ParseError("posetx: give exactly one of --check-antichain or --chain-bound");
  }
  if (a.check_antichain >= 0) {
    const bool ok = verify_s_antichain(a.check_antichain);
    return {{{"L", a.check_antichain}, {"antichain", ok}},
            ok,
            ok ? "S_1..S_L are pairwise incomparable" : "comparable S_l found"};
  }
  json rows = json::array();
  bool ok = true;
  for (const auto& p : x_ground_set(a.chain_bound)) {
    const auto h = descending_chain_max(p);
    ok = ok && h <= p.j - 1;
    rows.push_back(json::array({p.i, p.j, h}));
  }
  return {{{"max_j", a.chain_bound}, {"elements", rows}, {"within_bound", ok}},
          ok,
          ok ? "every descending chain below (i,j) has at most j-1 members" : "chain bound violated"};
}

struct YoungArgs {
  bool to_ideal = false;
  bool to_order_ideal = false;
  std::string points_file;
  std::string ideal_file;
};

Outcome run_young(const YoungArgs& a) {
  if (a.to_ideal == a.to_order_ideal) throw io::ParseError("young: give exactly one of --to-ideal or --to-order-ideal");
  if (a.to_ideal) {
    if (a.points_file.empty()) throw io::ParseError("--to-ideal needs -P");
    const auto o = io::order_ideal_from_json(io::load_file(a.points_file), a.points_file + ":$");
    const auto ideal = young_complement(o);
    return {io::to_json(ideal), {}, to_string(ideal)};
  }
  if (a.ideal_file.empty()) throw io::ParseError("--to-order-ideal needs -I");
  const auto ideal = io::ideal_from_json(io::load_file(a.ideal_file), a.ideal_file + ":$");
  const auto o = young_cocomplement(ideal);
  return {io::to_json(o), {}, std::to_string(o.points().size()) + " points"};
}

// ---- example35 -----------------------------------------------------------

Outcome run_example35() {
  const FiberMatrix a{{1, 1, 1, 0, 0, 0}, {0, 3, 2, 1, 0, 0}, {5, 0, 2, 0, 1, 0}, {0, 2, 1, 0, 0, 1}};
  const Degree b1{1, 3, 5, 2};
  const Degree b2{5, 10, 10, 6};
  const Degree b = b1 + b2;
  std::vector<ExponentVector> expect1{{1, 0, 0, 3, 0, 2}, {0, 1, 0, 0, 5, 0}, {0, 0, 1, 1, 3, 1}};
  std::vector<ExponentVector> expect2{{0, 0, 5, 0, 0, 1}, {1, 2, 2, 0, 1, 0}, {2, 3, 0, 1, 0, 0}};
  std::sort(expect1.begin(), expect1.end());
  std::sort(expect2.begin(), expect2.end());
  const ExponentVector expected_witness{1, 1, 4, 2, 2, 2};
  const auto zero = MonomialIdeal::zero(a.cols());

  const auto f1 = fiber_points(a, b1);
  const auto f2 = fiber_points(a, b2);
  const auto f = make_fiber(a, b);
  const bool mink = minkowski_decomposes(a, b, b1, b2);
  const auto lat = ma_decomposes(zero, a, b, b1, b2);
  const bool atomic = is_atomic(a, b);
  const bool lattice_atomic = is_ma_atomic(zero, a, b);

  json checks{{"fiber_b1_matches", f1 == expect1},
              {"fiber_b2_matches", f2 == expect2},
              {"minkowski_decomposes", mink},
              {"lattice_decomposes", lat.decomposes},
              {"witness_matches", lat.witness == expected_witness},
              {"atomic", atomic},
              {"lattice_atomic", lattice_atomic}};
  const bool pass = f1 == expect1 && f2 == expect2 && mink && !lat.decomposes && lat.witness == expected_witness &&
                    !atomic && lattice_atomic;
  json payload{{"matrix", io::to_json(a)},
               {"b1", io::to_json(b1)},
               {"b2", io::to_json(b2)},
               {"b", io::to_json(b)},
               {"fiber_b1", vectors_json(f1)},
               {"fiber_b2", vectors_json(f2)},
               {"fiber_b", vectors_json(f.points)},
               {"vertices_b", vectors_json(f.vertices)},
               {"witness", lat.witness ? io::to_json(*lat.witness) : json(nullptr)},
               {"checks", checks}};
  return {payload, pass,
          pass ? "P_b = P_b1 + P_b2 while (1,1,4,2,2,2) splits into no lattice-point sum"
               : "reproduction mismatch, see payload.checks"};
}

}  // namespace

RunReport run(std::span<const std::string> args) {
  RunReport report;
  const auto start = std::chrono::steady_clock::now();

  CLI::App app{"Exact monomial-ideal combinatorics and integer-matrix fiber analysis.", "staircase"};
  app.require_subcommand(1);

  IdealArgs ideal_args;
  auto* ideal = app.add_subcommand("ideal", "Canonical form, membership, containment and lattice operations on monomial ideals.");
  ideal->add_option("-I,--ideal", ideal_args.ideal_file, "Ideal JSON {\"vars\", \"gens\"}")->required();
  ideal->add_option("-J,--other", ideal_args.other_file, "Second ideal for contains/sum/intersect");
  ideal->add_option("--op", ideal_args.op,
                    "minimalize | member | contains | sum | intersect | quotient | artinian | standard | standard-up-to");
  ideal->add_option("--monomial", ideal_args.monomial, "Exponent vector, e.g. 2,1");
  ideal->add_option("--bound", ideal_args.bound, "Total-degree bound for standard-up-to");

  DecomposeArgs dec_args;
  auto* decompose = app.add_subcommand(
      "decompose", "Irredundant primary decomposition of a monomial ideal, one component per associated monomial prime.");
  decompose->add_option("-I,--ideal", dec_args.ideal_file, "Ideal JSON")->required();
  decompose->add_option("--kind", dec_args.kind, "primary | irreducible | primes");

  HilbertArgs hil_args;
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert series numerator and Hilbert function of S/I under an N^d grading.");
  hilbert->add_option("-I,--ideal", hil_args.ideal_file, "Ideal JSON")->required();
  hilbert->add_option("-D,--grading", hil_args.grading_file, "Grading matrix JSON (default: fine grading)");
  hilbert->add_option("--table", hil_args.table, "Print the Hilbert function for all degrees with coordinate sum <= K");

  FamilyArgs anti_args;
  auto* antichain = app.add_subcommand(
      "antichain", "Comparable-pair search, standard-monomial trace refinement and associated-prime grouping over a family of ideals.");
  antichain->add_option("-F,--family", anti_args.family_file, "JSON list of ideals")->required();
  antichain->add_option("--op", anti_args.op, "check | pair | trace | primes");
  antichain->add_option("--pivot", anti_args.pivot_file, "Artinian pivot ideal for --op trace");

  FamilyArgs chain_args;
  auto* chain = app.add_subcommand("chain", "Longest strictly descending chain of ideals within a family.");
  chain->add_option("-F,--family", chain_args.family_file, "JSON list of ideals")->required();

  FiberArgs fiber_args;
  auto* fiber = app.add_subcommand(
      "fiber", "Lattice points and hull vertices of the fiber of A over b; optional Minkowski and lattice-point split tests.");
  fiber->add_option("-A,--matrix", fiber_args.matrix_file, "Matrix JSON {\"rows\", \"cols\", \"entries\"}")->required();
  fiber->add_option("-b,--degree", fiber_args.degree, "Degree b, e.g. 1,3,5,2")->required();
  fiber->add_option("--split", fiber_args.split, "First summand b1; tests b = b1 + (b - b1)");
  fiber->add_option("-M,--ideal", fiber_args.ideal_file, "Ideal M for (M,A) fibers (default: zero ideal)");
  fiber->add_flag("--atomic", fiber_args.atomic, "Also decide atomicity in both senses");

  ScanArgs scan_args;
  auto* scan = app.add_subcommand(
      "atomic-scan", "Atomic fibers among degrees A u with |u| <= K, by Minkowski (vertex) or lattice-point splits.");
  scan->add_option("-A,--matrix", scan_args.matrix_file, "Matrix JSON")->required();
  scan->add_option("--bound", scan_args.bound, "Maximum total degree of u")->required();
  scan->add_option("--mode", scan_args.mode, "vertex | lattice");
  scan->add_option("-M,--ideal", scan_args.ideal_file, "Ideal M for lattice mode (default: zero ideal)");
  scan->add_option("--workers", scan_args.workers, "Worker threads (default: OpenMP runtime)");

  SagbiArgs sagbi_args;
  auto* sagbi = app.add_subcommand(
      "sagbi", "Strong SAGBI generators k_b x^b over the atomic fibers of A, with k_b the gcd of c^u over the fiber.");
  sagbi->add_option("-A,--matrix", sagbi_args.matrix_file, "Matrix JSON")->required();
  sagbi->add_option("--coeffs", sagbi_args.coeffs, "Nonzero integers c_1,...,c_n")->required();
  sagbi->add_option("--bound", sagbi_args.bound, "Scan bound on |u|")->required();

  VertexIdealArgs vi_args;
  auto* vertex_ideal = app.add_subcommand(
      "vertex-ideal", "Vertex ideal of A through a degree bound: u is standard iff u is a vertex of its own fiber polytope.");
  vertex_ideal->add_option("-A,--matrix", vi_args.matrix_file, "Matrix JSON")->required();
  vertex_ideal->add_option("--bound", vi_args.bound, "Total-degree bound")->required();

  LiftArgs lift_args;
  auto* lift = app.add_subcommand(
      "lift", "Pull a monomial ideal of a monoid algebra back to the polynomial ring along x_i -> t^{g_i}.");
  lift->add_option("-G,--generators", lift_args.matrix_file, "Matrix JSON whose columns generate the monoid")->required();
  lift->add_option("--degree", lift_args.degrees, "Generator t^b of the ideal; repeatable");
  lift->add_option("--bound", lift_args.bound, "Total-degree bound on the lifted generators")->required();

  PosetArgs poset_args;
  auto* posetx = app.add_subcommand(
      "posetx", "The poset X of pairs i < j: antichain check of the dual order ideals S_l and descending-chain bounds.");
  posetx->add_option("--check-antichain", poset_args.check_antichain, "Verify S_1..S_L are pairwise incomparable");
  posetx->add_option("--chain-bound", poset_args.chain_bound, "Verify chain heights for all elements with j <= J");

  YoungArgs young_args;
  auto* young = app.add_subcommand(
      "young", "Complement bijection between finite order ideals of N^n and artinian monomial ideals.");
  young->add_flag("--to-ideal", young_args.to_ideal, "Order ideal -> artinian ideal");
  young->add_flag("--to-order-ideal", young_args.to_order_ideal, "Artinian ideal -> order ideal");
  young->add_option("-P,--points", young_args.points_file, "Order ideal JSON {\"vars\", \"points\"}");
  young->add_option("-I,--ideal", young_args.ideal_file, "Ideal JSON");

  auto* example35 = app.add_subcommand(
      "example35",
      "Reproduce the 4x6 counterexample: a fiber that is a Minkowski sum but not a sum of lattice points.");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    report.exit_code = app.exit(e, out, err);
    if (report.exit_code == 0) {
      report.help = out.str();
    } else {
      report.exit_code = kExitUsage;
      report.summary = err.str();
    }
    return report;
  }

  try {
    Outcome outcome;
    const auto* sub = app.get_subcommands().front();
    report.command = sub->get_name();
    if (sub == ideal) outcome = run_ideal(ideal_args);
    else if (sub == decompose) outcome = run_decompose(dec_args);
    else if (sub == hilbert) outcome = run_hilbert(hil_args);
    else if (sub == antichain) outcome = run_antichain(anti_args);
    else if (sub == chain) outcome = run_chain(chain_args);
    else if (sub == fiber) outcome = run_fiber(fiber_args);
    else if (sub == scan) outcome = run_atomic_scan(scan_args);
    else if (sub == sagbi) outcome = run_sagbi(sagbi_args);
    else if (sub == vertex_ideal) outcome = run_vertex_ideal(vi_args);
    else if (sub == lift) outcome = run_lift(lift_args);
    else if (sub == posetx) outcome = run_posetx(poset_args);
    else if (sub == young) outcome = run_young(young_args);
    else if (sub == example35) outcome = run_example35();
    report.payload = std::move(outcome.payload);
    report.passed = outcome.passed;
    report.summary = std::move(outcome.summary);
    report.exit_code = report.passed.value_or(true) ? kExitOk : kExitVerificationFailed;
  } catch (const std::exception& e) {
    report.payload = nullptr;
    report.passed.reset();
    report.exit_code = kExitUsage;
    report.summary = std::string("error: ") + e.what();
  }
  report.duration = std::chrono::steady_clock::now() - start;
  return report;
}

json report_json(const RunReport& report) {
  json out{{"command", report.command}, {"payload", report.payload}};
  if (report.passed) out["status"] = *report.passed ? "pass" : "fail";
  return out;
}

}  // namespace staircase::cli
