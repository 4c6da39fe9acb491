#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "lpiso/io.hpp"
#include "lpiso/synthesis.hpp"

using namespace lpiso;

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;
constexpr int kExitBadInput = 65;

struct MakeOptions {
    std::string kind;
    std::string p_text = "1";
    std::uint32_t n = 2;
    bool n_set = false;
    std::uint64_t scramble_seed = 0;
    bool scrambled = false;
    std::uint32_t scramble_atoms = 0;
    std::int64_t scramble_level = 2;
};

struct CommonOptions {
    std::int64_t precision = 10;
    std::int64_t depth = 4;
    std::size_t budget = 1'000'000;
    std::size_t probes = 8;
    bool strict62 = false;
    std::string in_path;
    std::string out_path;
};

void add_make_flags(CLI::App* cmd, MakeOptions& mk) {
    cmd->add_option("--make", mk.kind, "build a presentation: lp_n|lp|Lp01|lpn_sum|lp_sum");
    cmd->add_option("--p", mk.p_text, "Lp exponent (rational, e.g. 3/2)");
    cmd->add_option("--n", mk.n, "dimension for lp_n / lpn_sum")->each([&](const std::string&) { mk.n_set = true; });
    cmd->add_flag("--scramble", mk.scrambled, "apply a seeded hidden isometry");
    cmd->add_option("--scramble-seed", mk.scramble_seed, "seed for the hidden isometry");
    cmd->add_option("--scramble-atoms", mk.scramble_atoms, "atomic coordinates the scramble may permute");
    cmd->add_option("--scramble-level", mk.scramble_level, "dyadic level of the piece rearrangement");
}

Presentation make_or_load(const MakeOptions& mk, const std::string& in_path) {
    if (!in_path.empty()) return load_presentation(in_path);
    if (mk.kind.empty()) raise(ErrorCode::BadInput, "give --in FILE or --make KIND");
    auto tag = parse_space_tag(mk.kind);
    if (!tag) raise(ErrorCode::BadInput, "unknown kind " + mk.kind);
    auto p = parse_rational(mk.p_text);
    if (!p) raise(ErrorCode::BadInput, "bad exponent " + mk.p_text);
    std::optional<std::uint32_t> dim;
    if (has_dimension_cap(*tag)) dim = mk.n;
    if (!mk.scrambled) return Presentation::standard(*tag, Exponent(*p), dim);
    std::uint32_t atoms = mk.scramble_atoms;
    if (atoms == 0 && has_atomic_part(*tag)) atoms = dim ? *dim : 4;
    return Presentation::scrambled(*tag, Exponent(*p), dim,
                                   Scramble::random(mk.scramble_seed, atoms, mk.scramble_level));
}

void warn_p2(const Presentation& pres) {
    if (pres.kind() == Presentation::Kind::Banach && pres.exponent().value() == 2)
        std::cerr << "warning: p = 2 norms are fine, but the isometry-structure results need p != 2\n";
}

void emit(const CommonOptions& opt, const std::string& report) {
    std::cout << report;
    if (!opt.out_path.empty()) write_file(opt.out_path, report);
}

std::vector<LpVector> default_probes(const Presentation& pres, std::size_t count) {
    std::vector<LpVector> probes;
    for (std::size_t i = 0; i < count; ++i) probes.push_back(pres.generator(static_cast<std::uint32_t>(i)));
    return probes;
}

int cmd_present(const MakeOptions& mk, const CommonOptions& opt, std::size_t points,
                bool check_moduli) {
    Presentation pres = make_or_load(mk, opt.in_path);
    std::ostringstream out;
    out << kReportHeader << "\n";
    out << "command present\n";
    out << presentation_to_text(pres);
    out << "rational-points";
    for (const auto& desc : pres.enumerate_rational_points(points)) out << " | " << desc;
    out << "\n";
    for (std::size_t i = 0; i < std::min<std::size_t>(points, 6); ++i)
        for (std::size_t j = i + 1; j < std::min<std::size_t>(points, 6); ++j)
            out << "d(" << i << "," << j << ") = "
                << pres.eval_metric(PointIndex(i), PointIndex(j), opt.precision).to_string() << "\n";
    bool moduli_ok = true;
    if (check_moduli && pres.kind() == Presentation::Kind::Banach) {
        Signature sig = Signature::banach();
        const std::string symbols[] = {"+", "norm", Signature::scalar_symbol(Rational(2))};
        for (const std::string& symbol : symbols) {
            auto report = check_modulus(pres, symbol,
                                        [&](std::int64_t kk) { return sig.modulus(symbol, kk); },
                                        opt.probes * 8, opt.precision);
            out << "modulus " << symbol << " " << (report.clean() ? "clean" : "VIOLATED")
                << " (" << report.samples_checked << " samples, " << report.inconclusive
                << " inconclusive)\n";
            moduli_ok = moduli_ok && report.clean();
        }
    }
    emit(opt, out.str());
    if (!opt.out_path.empty() && opt.in_path.empty()) save_presentation(pres, opt.out_path);
    return moduli_ok ? kExitSuccess : kExitViolation;
}

int cmd_disintegrate(const MakeOptions& mk, const CommonOptions& opt, std::int64_t tolerance) {
    Presentation pres = make_or_load(mk, opt.in_path);
    warn_p2(pres);
    auto tree = presentation_disintegration(pres, opt.depth);
    auto report = validate_disintegration(tree, opt.precision, tolerance,
                                          default_probes(pres, opt.probes));
    std::ostringstream out;
    out << kReportHeader << "\ncommand disintegrate\n" << format_report(report) << tree_dump(tree, nullptr);
    emit(opt, out.str());
    if (report.all_pass()) return kExitSuccess;
    if (!report.nonvanishing || !report.separating || !report.summative ||
        report.density == DensityVerdict::Violated)
        return kExitViolation;
    return kExitInconclusive;
}

int cmd_partition(const MakeOptions& mk, const CommonOptions& opt) {
    Presentation pres = make_or_load(mk, opt.in_path);
    warn_p2(pres);
    auto tree = presentation_disintegration(pres, opt.depth);
    auto report = validate_disintegration(tree, opt.precision, opt.precision, {});
    auto part = partition_chains(tree, report, opt.strict62);
    std::ostringstream out;
    out << kReportHeader << "\ncommand partition\n";
    out << "chains " << part.chain_count() << "\n";
    out << "certificates " << part.certificates.size() << " all-replayed ";
    bool all = true;
    for (const auto& cert : part.certificates) all = all && cert.holds();
    out << (all ? "pass" : "FAIL") << "\n";
    if (opt.strict62) {
        out << "strict-6-2 " << (part.strict_failures.empty() ? "pass" : "inconclusive") << "\n";
        for (const auto& f : part.strict_failures) out << "strict-miss " << f << "\n";
    }
    out << tree_dump(tree, &part);
    emit(opt, out.str());
    if (!all) return kExitViolation;
    if (opt.strict62 && !part.strict_failures.empty()) return kExitInconclusive;
    return kExitSuccess;
}

int cmd_limits(const MakeOptions& mk, const CommonOptions& opt) {
    Presentation pres = make_or_load(mk, opt.in_path);
    warn_p2(pres);
    auto tree = presentation_disintegration(pres, opt.depth);
    auto report = validate_disintegration(tree, opt.precision, opt.precision, {});
    auto part = partition_chains(tree, report);
    auto limits = all_chain_limits(tree, part, opt.precision);
    std::ostringstream out;
    out << kReportHeader << "\ncommand limits\n";
    bool any_unknown = false;
    for (const auto& lim : limits) {
        out << "chain " << lim.chain_id << " " << atom_verdict_name(lim.verdict)
            << " norm-upper " << lim.norm_upper_bound.to_decimal_string();
        if (lim.witness) out << " witness " << vector_literal(*lim.witness);
        out << "\n";
        any_unknown = any_unknown || lim.verdict == AtomVerdict::UnknownAtDepth;
    }
    emit(opt, out.str());
    return any_unknown ? kExitInconclusive : kExitSuccess;
}

int cmd_synthesize(const MakeOptions& mk, const CommonOptions& opt, std::size_t points) {
    Presentation target = make_or_load(mk, opt.in_path);
    auto synth = synthesize_isometry(target, opt.depth, opt.precision);
    std::vector<PointIndex> table;
    for (std::size_t m = 0; m < points; ++m) table.push_back(synth.image_index(PointIndex(m)));
    Presentation source = Presentation::standard(target.tag(), target.exponent(), target.dimension());
    auto report = verify_isometry(table, source, target, points, opt.precision);

    std::ostringstream out;
    out << kReportHeader << "\ncommand synthesize\n";
    out << "atoms " << synth.atom_images().size() << " grid-level " << synth.grid_level() << "\n";
    for (std::size_t i = 0; i < synth.atom_images().size(); ++i) {
        const auto& img = synth.atom_images()[i];
        out << "atom " << i << " -> chain " << img.chain_id << " " << vector_literal(img.witness)
            << " norm " << to_string(img.norm) << "\n";
    }
    out << "verification " << check_verdict_name(report.verdict) << " on " << points
        << " points at 4*2^-" << opt.precision << "\n";
    out << map_to_text(table);
    emit(opt, out.str());
    if (report.verdict == CheckVerdict::Violated) return kExitViolation;
    return report.passed() ? kExitSuccess : kExitInconclusive;
}

int cmd_verify(const CommonOptions& opt, const std::string& source_path,
               const std::string& target_path, const std::string& map_path, std::size_t points) {
    Presentation source = load_presentation(source_path);
    Presentation target = load_presentation(target_path);
    auto table = load_map(map_path);
    std::size_t n = points == 0 ? table.size() : points;
    auto report = verify_isometry(table, source, target, n, opt.precision);
    std::ostringstream out;
    out << kReportHeader << "\ncommand verify\n";
    out << "points " << n << " tolerance 4*2^-" << opt.precision << "\n";
    for (const auto& check : report.checks)
        out << check.description << " : " << check.discrepancy.to_string() << " : "
            << check_verdict_name(check.verdict) << "\n";
    out << "verdict " << check_verdict_name(report.verdict) << "\n";
    emit(opt, out.str());
    if (report.verdict == CheckVerdict::Violated) return kExitViolation;
    return report.passed() ? kExitSuccess : kExitInconclusive;
}

int cmd_stage_sets(const MakeOptions& mk, const CommonOptions& opt, std::int64_t stage,
                   std::int64_t max_k, std::uint32_t max_m, std::size_t a2_nodes) {
    Presentation pres = make_or_load(mk, opt.in_path);
    warn_p2(pres);
    auto tree = presentation_disintegration(pres, opt.depth);
    auto report = validate_disintegration(tree, opt.precision, opt.precision, {});
    auto part = partition_chains(tree, report);
    StageSetEvaluator eval(tree, part, all_chain_limits(tree, part, opt.precision), stage);

    std::ostringstream out;
    out << kReportHeader << "\ncommand stage-sets\nstage " << stage << "\n";
    for (std::uint32_t n = 0; n < part.chain_count(); ++n)
        for (std::int64_t k = 0; k <= max_k; ++k)
            out << "A1 n=" << n << " k=" << k << " " << stage_verdict_name(eval.a1(n, k)) << "\n";
    auto order = tree.bfs_order();
    for (std::size_t t = 0; t < std::min(a2_nodes, order.size()); ++t)
        for (std::uint32_t M = 0; M <= max_m; ++M)
            for (std::int64_t k = 0; k <= max_k; ++k)
                out << "A2 nu=" << address_to_string(order[t]) << " M=" << M << " k=" << k << " "
                    << stage_verdict_name(eval.a2(order[t], M, k)) << "\n";
    emit(opt, out.str());
    return kExitSuccess;
}

int cmd_r_check(const CommonOptions& opt, const std::string& source_path,
                const std::string& target_path, const std::string& table_path, bool identity) {
    Presentation source = load_presentation(source_path);
    Presentation target = load_presentation(target_path);
    TermMaps tm{&source, &target};
    IsometryTable table;
    if (identity) {
        table = IsometryTable::identity(required_rows(source, tm, opt.depth), opt.depth + 1);
    } else if (!table_path.empty()) {
        table = load_table(table_path);
    } else {
        raise(ErrorCode::BadInput, "give --table FILE or --identity");
    }
    auto verdict = check_conditions(table, source, target, tm, opt.depth, opt.precision);
    std::ostringstream out;
    out << kReportHeader << "\ncommand r-check\ndepth " << opt.depth << "\n";
    bool any_inconclusive = false;
    for (std::size_t c = 0; c < 6; ++c) {
        out << "condition " << (c + 1) << " " << cond_status_name(verdict.status[c]);
        if (verdict.witness[c])
            out << " at " << verdict.witness[c]->instance << " lhs "
                << verdict.witness[c]->lhs.to_string() << " threshold "
                << to_string(verdict.witness[c]->threshold);
        out << "\n";
        any_inconclusive = any_inconclusive || verdict.status[c] == CondStatus::Inconclusive;
    }
    emit(opt, out.str());
    if (verdict.any_violation()) return kExitViolation;
    return any_inconclusive ? kExitInconclusive : kExitSuccess;
}

int cmd_r_search(const CommonOptions& opt, const std::string& source_path,
                 const std::string& target_path, std::int64_t value_bound) {
    Presentation source = load_presentation(source_path);
    Presentation target = load_presentation(target_path);
    TermMaps tm{&source, &target};
    auto result = search_tables(source, target, tm, opt.depth, opt.precision, opt.budget, value_bound);
    std::ostringstream out;
    out << kReportHeader << "\ncommand r-search\n";
    out << "explored " << result.explored << (result.budget_exhausted ? " budget-exhausted" : "") << "\n";
    for (std::size_t c = 0; c < 6; ++c)
        out << "prunes condition " << (c + 1) << ": " << result.prune_counts[c] << "\n";
    out << "survivors " << result.survivors.size() << "\n";
    for (std::size_t s = 0; s < result.survivors.size(); ++s)
        out << "survivor " << s << "\n" << table_to_text(result.survivors[s]);
    emit(opt, out.str());
    if (result.budget_exhausted) return kExitInconclusive;
    return result.survivors.empty() ? kExitViolation : kExitSuccess;
}

int cmd_encode_graph(const CommonOptions& opt) {
    Graph g = load_graph(opt.in_path);
    auto m = encode(g);
    std::ostringstream out;
    out << kReportHeader << "\ncommand encode-graph\npoints " << m.point_count << "\n"
        << presentation_to_text(m.presentation);
    emit(opt, out.str());
    if (!opt.out_path.empty()) save_presentation(m.presentation, opt.out_path);
    return kExitSuccess;
}

int cmd_transfer_iso(const CommonOptions& opt, const std::string& g0_path,
                     const std::string& g1_path, const std::string& map_path) {
    Graph g0 = load_graph(g0_path);
    Graph g1 = load_graph(g1_path);
    auto raw = load_map(map_path);
    std::vector<std::uint32_t> vm;
    for (const auto& v : raw) vm.push_back(static_cast<std::uint32_t>(v));
    auto as_iso = isomorphism_to_isometry(vm, g0, g1);
    auto back = as_iso.ok ? isometry_to_isomorphism(as_iso.map, g0, g1) : TransferResult{};
    std::ostringstream out;
    out << kReportHeader << "\ncommand transfer-iso\n";
    out << "isomorphism-to-isometry " << (as_iso.ok ? "certified" : as_iso.detail) << "\n";
    if (as_iso.ok)
        out << "isometry-to-isomorphism " << (back.ok ? "certified round trip" : back.detail) << "\n";
    emit(opt, out.str());
    return as_iso.ok && back.ok ? kExitSuccess : kExitViolation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for Lebesgue-space presentations, disintegrations and isometry search"};
    app.require_subcommand(1);

    MakeOptions mk;
    CommonOptions opt;
    std::size_t points = 16;
    std::int64_t tolerance = 10;
    std::int64_t stage = 8;
    std::int64_t max_k = 4;
    std::uint32_t max_m = 4;
    std::size_t a2_nodes = 8;
    std::int64_t value_bound = 4;
    std::string source_path, target_path, map_path, table_path, g0_path, g1_path;

    auto add_common = [&](CLI::App* cmd, bool with_make = true) {
        cmd->add_option("--precision", opt.precision, "precision exponent k: enclosures at 2^-k");
        cmd->add_option("--depth", opt.depth, "tree depth / index depth");
        cmd->add_option("--budget", opt.budget, "search budget");
        cmd->add_option("--probes", opt.probes, "density probe count");
        cmd->add_flag("--strict-6-2", opt.strict62, "check the strengthened child condition");
        cmd->add_option("--out", opt.out_path, "write the report here as well");
        if (with_make) {
            cmd->add_option("--in", opt.in_path, "presentation file");
            add_make_flags(cmd, mk);
        }
        return cmd;
    };

    bool check_moduli = false;
    auto* present = add_common(app.add_subcommand("present", "build or inspect a presentation"));
    present->add_option("--points", points, "rational points to list");
    present->add_flag("--check-moduli", check_moduli, "spot-check the signature moduli");

    auto* disintegrate = add_common(app.add_subcommand("disintegrate", "build and validate the standard tree"));
    disintegrate->add_option("--tolerance", tolerance, "density tolerance exponent t (2^-t)");

    add_common(app.add_subcommand("partition", "partition into almost norm-maximizing chains"));
    add_common(app.add_subcommand("limits", "chain limits and atom verdicts"));

    auto* synthesize = add_common(app.add_subcommand("synthesize", "synthesize the isometry onto a presentation"));
    synthesize->add_option("--points", points, "rational points to verify and emit");

    std::size_t verify_points = 0;
    auto* verify = add_common(app.add_subcommand("verify", "verify a candidate map table"), false);
    verify->add_option("--source", source_path, "source presentation file")->required();
    verify->add_option("--target", target_path, "target presentation file")->required();
    verify->add_option("--map", map_path, "map file (m v lines)")->required();
    verify->add_option("--points", verify_points, "points to check (0 = all mapped)");

    auto* stage_sets = add_common(app.add_subcommand("stage-sets", "stage-bounded A1/A2 membership"));
    stage_sets->add_option("--stage", stage, "stage bound s");
    stage_sets->add_option("--max-k", max_k, "largest k in the tables");
    stage_sets->add_option("--max-m", max_m, "largest M in the A2 table");
    stage_sets->add_option("--a2-nodes", a2_nodes, "tree nodes listed in the A2 table");

    bool identity_table = false;
    auto* rcheck = app.add_subcommand("r-check", "check the six membership conditions of a table");
    rcheck->add_option("--source", source_path)->required();
    rcheck->add_option("--target", target_path)->required();
    rcheck->add_option("--table", table_path, "table file; or use --identity");
    rcheck->add_flag("--identity", identity_table, "check the identity table over the needed rows");
    rcheck->add_option("--depth", opt.depth);
    rcheck->add_option("--precision", opt.precision);
    rcheck->add_option("--out", opt.out_path);

    auto* rsearch = app.add_subcommand("r-search", "bounded search for surviving table prefixes");
    rsearch->add_option("--source", source_path)->required();
    rsearch->add_option("--target", target_path)->required();
    rsearch->add_option("--depth", opt.depth);
    rsearch->add_option("--precision", opt.precision);
    rsearch->add_option("--budget", opt.budget);
    rsearch->add_option("--value-bound", value_bound, "candidate image indices per cell");
    rsearch->add_option("--out", opt.out_path);

    auto* encode_graph = app.add_subcommand("encode-graph", "encode a graph as a metric presentation");
    encode_graph->add_option("--in", opt.in_path)->required();
    encode_graph->add_option("--out", opt.out_path);

    auto* transfer = app.add_subcommand("transfer-iso", "transfer a vertex map across the encoding");
    transfer->add_option("--g0", g0_path)->required();
    transfer->add_option("--g1", g1_path)->required();
    transfer->add_option("--map", map_path)->required();
    transfer->add_option("--out", opt.out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (present->parsed()) return cmd_present(mk, opt, points, check_moduli);
        if (disintegrate->parsed()) return cmd_disintegrate(mk, opt, tolerance);
        if (app.get_subcommand("partition")->parsed()) return cmd_partition(mk, opt);
        if (app.get_subcommand("limits")->parsed()) return cmd_limits(mk, opt);
        if (synthesize->parsed()) return cmd_synthesize(mk, opt, points);
        if (verify->parsed()) return cmd_verify(opt, source_path, target_path, map_path, verify_points);
        if (stage_sets->parsed()) return cmd_stage_sets(mk, opt, stage, max_k, max_m, a2_nodes);
        if (rcheck->parsed()) return cmd_r_check(opt, source_path, target_path, table_path, identity_table);
        if (rsearch->parsed()) return cmd_r_search(opt, source_path, target_path, value_bound);
        if (encode_graph->parsed()) return cmd_encode_graph(opt);
        if (transfer->parsed()) return cmd_transfer_iso(opt, g0_path, g1_path, map_path);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == ErrorCode::BadInput ? kExitBadInput : kExitInconclusive;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitUsage;
}
