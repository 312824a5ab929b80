#include "gct/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "gct/corpus.hpp"
#include "gct/json_io.hpp"

namespace gct {

namespace {

struct CliOptions {
    std::string in_path;
    std::string out_path;
    int max_size = 8;
    int rank = 0;  // 0: derive from the instance
    int degree_cap = 10;
    int period_cap = 64;
    unsigned long long seed = 0;
    bool no_timestamp = false;
};

std::string iso_timestamp() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
    return buf;
}

Json read_payload(const CliOptions& opt, std::istream& in) {
    std::string text;
    if (!opt.in_path.empty()) {
        std::ifstream f(opt.in_path);
        if (!f) throw CLI::ValidationError("--in", "cannot open " + opt.in_path);
        std::stringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    } else {
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return Json::parse(text);
    } catch (const std::exception& e) {
        throw CLI::ValidationError("payload", std::string("malformed JSON: ") + e.what());
    }
}

void write_output(const CliOptions& opt, std::ostream& out, Json j) {
    if (!opt.no_timestamp) j["timestamp"] = iso_timestamp();
    std::string text = j.dump(2) + "\n";
    if (!opt.out_path.empty()) {
        std::ofstream f(opt.out_path);
        if (!f) throw CLI::ValidationError("--out", "cannot open " + opt.out_path);
        f << text;
    } else {
        out << text;
    }
}

RatMat random_integer_matrix(std::mt19937_64& rng, int rows, int cols) {
    std::uniform_int_distribution<int> dist(-9, 9);
    RatMat m(rows, RatVec(cols));
    for (auto& row : m)
        for (auto& x : row) x = Rat(dist(rng));
    return m;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"exact Littlewood-Richardson / invariant-theory toolkit"};
    app.require_subcommand(1);
    CliOptions opt;

    // handler returns the output document
    std::function<Json(const CliOptions&, std::istream&)> handler;
    bool raw_text_output = false;
    std::string raw_text;

    auto add_common = [&](CLI::App* cmd, bool payload) {
        if (payload) cmd->add_option("--in", opt.in_path, "read the JSON payload from a file");
        cmd->add_option("--out", opt.out_path, "write the JSON result to a file");
        cmd->add_flag("--no-timestamp", opt.no_timestamp, "suppress the timestamp field");
        return cmd;
    };

    // ---- LR engine ----
    auto* lr_cmd = add_common(app.add_subcommand("lr", "Littlewood-Richardson coefficient"), true);
    lr_cmd->callback([&]() {
        handler = [](const CliOptions& o, std::istream& is) {
            LRInstance inst = lr_instance_from_json(read_payload(o, is));
            long long c = lr_count(inst);
            Json j;
            j["c"] = c;
            j["nonzero"] = c > 0;
            return j;
        };
    });

    auto* lrp_cmd = add_common(app.add_subcommand("lr-polytope", "LR polytope of a triple"), true);
    lrp_cmd->add_option("--rank", opt.rank, "rank n (default: max height)");
    lrp_cmd->callback([&]() {
        handler = [](const CliOptions& o, std::istream& is) {
            LRInstance inst = lr_instance_from_json(read_payload(o, is));
            RationalPolytope P = o.rank > 0 ? lr_polytope(inst, o.rank) : lr_polytope(inst);
            return to_json(P);
        };
    });

    auto* nv_cmd = add_common(
        app.add_subcommand("nonvanish", "decide nonvanishing via LP + saturation"), true);
    nv_cmd->callback([&]() {
        handler = [](const CliOptions& o, std::istream& is) {
            LRInstance inst = lr_instance_from_json(read_payload(o, is));
            Json j;
            j["nonzero"] = decide_nonvanishing(inst);
            return j;
        };
    });

    auto* st_cmd =
        add_common(app.add_subcommand("stretch", "stretching polynomial of a triple"), true);
    st_cmd->callback([&]() {
        handler = [](const CliOptions& o, std::istream& is) {
            Json payload = read_payload(o, is);
            LRInstance inst = lr_instance_from_json(payload);
            int kmax = payload.value("kmax", 6);
            Quasipolynomial q = fit_stretching(inst, kmax);
            Json j;
            j["c"] = lr_count(inst);
            j["nonzero"] = lr_count(inst) > 0;
            j["stretch"] = to_json(q);
            return j;
        };
    });

    auto* cl_cmd = add_common(
        app.add_subcommand("crystal-lr", "LR coefficient via highest-weight pairs"), true);
    cl_cmd->add_option("--rank", opt.rank, "crystal rank n (default: max height)");
    cl_cmd->callback([&]() {
        handler = [](const CliOptions& o, std::istream& is) {
            Json payload = read_payload(o, is);
            LRInstance inst = lr_instance_from_json(payload);
            int n = o.rank > 0 ? o.rank : std::max(inst.max_height(), 1);
            Json j;
            j["c"] = lr_via_crystals(inst.alpha, inst.beta, inst.gamma, n);
            return j;
        };
    });

    // ---- polyhedra / lattice ----
    auto* eh_cmd =
        add_common(app.add_subcommand("ehrhart", "Ehrhart quasipolynomial and series"), true);
    eh_cmd->add_option("--degree-cap", opt.degree_cap, "series degree cap (default 10)");
    eh_cmd->add_option("--period-cap", opt.period_cap, "period search cap (default 64)");
    eh_cmd->callback([&]() {
        handler = [](const CliOptions& o, std::istream& is) {
            RationalPolytope P = polytope_from_json(read_payload(o, is));
            Quasipolynomial q = ehrhart_quasipolynomial(P, o.period_cap);
            Json j;
            j["quasipolynomial"] = to_json(q);
            j["index"] = q.index();
            j["positive"] = q.is_positive();
            j["saturated"] = q.is_saturated();
            int degB = q.period() * (std::max(q.degree(), 0) + 1);
            if (o.degree_cap >= degB) {
                auto [A, B] = ehrhart_series(q, o.degree_cap);
                j["series"] = Json{{"A", int_vector_to_json(A)}, {"B", int_vector_to_json(B)}};
            }
            return j;
        };
    });

    auto* ix_cmd = add_common(
        app.add_subcommand("index", "quasipolynomial index from the Smith form"), true);
    ix_cmd->callback([&]() {
        handler = [](const CliOptions& o, std::istream& is) {
            RationalPolytope P = polytope_from_json(read_payload(o, is));
            Json j;
            j["index"] = int_to_json(quasipolynomial_index(P));
            return j;
        };
    });

    auto* z2_cmd = add_common(
        app.add_subcommand("z2", "odd-denominator feasibility (polytope or Cx=d)"), true);
    z2_cmd->callback([&]() {
        handler = [](const CliOptions& o, std::istream& is) {
            Json payload = read_payload(o, is);
            Json j;
            if (payload.contains("C")) {
                j["feasible"] = z2_feasible_affine(int_matrix_from_json(payload.at("C")),
                                                   int_vector_from_json(payload.at("d")));
            } else {
                j["feasible"] = z2_feasible_polytope(polytope_from_json(payload));
            }
            return j;
        };
    });

    auto* snf_cmd = add_common(app.add_subcommand("snf", "Smith normal form"), true);
    snf_cmd->callback([&]() {
        handler = [](const CliOptions& o, std::istream& is) {
            Json payload = read_payload(o, is);
            IntMat C = int_matrix_from_json(payload.is_object() ? payload.at("C") : payload);
            return to_json(smith_normal_form(C));
        };
    });

    // ---- characters ----
    auto* ct_cmd = add_common(app.add_subcommand("char-table", "character table of S_n"), true);
    ct_cmd->callback([&]() {
        handler = [](const CliOptions& o, std::istream& is) {
            Json payload = read_payload(o, is);
            return to_json(character_table(payload.at("n").get<int>()));
        };
    });

    auto* sc_cmd = add_common(app.add_subcommand("schur", "Schur polynomial"), true);
    sc_cmd->callback([&]() {
        handler = [](const CliOptions& o, std::istream& is) {
            Json payload = read_payload(o, is);
            Partition lambda = partition_from_json(payload.at("lambda"));
            int n = payload.at("n").get<int>();
            Polynomial s = schur_polynomial(lambda, n);
            Json j = to_json(s);
            j["at_ones"] = rat_to_json(s.evaluate(RatVec(n, Rat(1))));
            return j;
        };
    });

    auto* kr_cmd = add_common(app.add_subcommand("kron", "Kronecker coefficient"), true);
    kr_cmd->callback([&]() {
        handler = [](const CliOptions& o, std::istream& is) {
            Json payload = read_payload(o, is);
            Json j;
            j["kronecker"] = int_to_json(kronecker_coefficient(
                partition_from_json(payload.at("lambda")), partition_from_json(payload.at("mu")),
                partition_from_json(payload.at("pi"))));
            return j;
        };
    });

    auto* pl_cmd = add_common(app.add_subcommand("plethysm", "plethysm constant"), true);
    pl_cmd->callback([&]() {
        handler = [](const CliOptions& o, std::istream& is) {
            Json payload = read_payload(o, is);
            auto a = plethysm_constant(
                partition_from_json(payload.at("lambda")), partition_from_json(payload.at("mu")),
                partition_from_json(payload.at("pi")), payload.at("n").get<int>());
            Json j;
            if (a) {
                j["plethysm"] = int_to_json(*a);
            } else {
                j["plethysm"] = nullptr;
                j["note"] = "not determined at this n (height of pi exceeds n)";
            }
            return j;
        };
    });

    auto* sr_cmd = add_common(app.add_subcommand("specht-rank", "Specht span rank"), true);
    sr_cmd->callback([&]() {
        handler = [](const CliOptions& o, std::istream& is) {
            Json payload = read_payload(o, is);
            Json j;
            j["rank"] = specht_rank(partition_from_json(payload.at("lambda")));
            return j;
        };
    });

    // ---- Grassmannian ----
    auto* sy_cmd = add_common(app.add_subcommand("syzygy", "van der Waerden syzygy"), true);
    sy_cmd->add_option("--seed", opt.seed, "seed for the vanishing spot-check");
    sy_cmd->callback([&]() {
        handler = [](const CliOptions& o, std::istream& is) {
            Json payload = read_payload(o, is);
            int n = payload.at("n").get<int>();
            int d = payload.at("d").get<int>();
            auto ints = [&](const char* k) {
                std::vector<int> v;
                for (const auto& x : payload.at(k)) v.push_back(x.get<int>());
                return v;
            };
            BracketPolynomial syz =
                vdw_syzygy(payload.at("s").get<int>(), ints("alpha"), ints("beta"), ints("gamma"),
                           n, d);
            std::mt19937_64 rng(o.seed);
            bool vanishes = true;
            for (int t = 0; t < 5; ++t)
                if (syz.evaluate(random_integer_matrix(rng, d, n)) != 0) vanishes = false;
            Json j;
            j["syzygy"] = to_json(syz);
            j["vanishes_on_random_minors"] = vanishes;
            return j;
        };
    });

    auto* str_cmd = add_common(app.add_subcommand("straighten", "straighten a bracket polynomial"),
                               true);
    str_cmd->add_option("--seed", opt.seed, "seed for the evaluation spot-check");
    str_cmd->callback([&]() {
        handler = [](const CliOptions& o, std::istream& is) {
            Json payload = read_payload(o, is);
            int n = payload.at("n").get<int>();
            int d = payload.at("d").get<int>();
            BracketPolynomial p = bracket_polynomial_from_json(payload.at("polynomial"));
            BracketPolynomial s = straighten(p, n, d);
            bool standard = true;
            for (const auto& [m, c] : s.terms())
                if (!is_standard_monomial(m)) standard = false;
            std::mt19937_64 rng(o.seed);
            bool equal = true;
            for (int t = 0; t < 5; ++t) {
                RatMat M = random_integer_matrix(rng, d, n);
                if (p.evaluate(M) != s.evaluate(M)) equal = false;
            }
            Json j;
            j["straightened"] = to_json(s);
            j["standard_only"] = standard;
            j["evaluation_equal_on_random_matrices"] = equal;
            return j;
        };
    });

    // ---- stability ----
    auto* mo_cmd = add_common(app.add_subcommand("molien", "Molien series of a finite group"),
                              true);
    mo_cmd->add_option("--degree-cap", opt.degree_cap, "series degree cap (default 10)");
    mo_cmd->callback([&]() {
        handler = [](const CliOptions& o, std::istream& is) {
            Json payload = read_payload(o, is);
            std::vector<RatMat> gens;
            for (const auto& g : payload.at("generators")) gens.push_back(rat_matrix_from_json(g));
            FiniteMatrixGroup G(std::move(gens));
            RatVec coeffs = molien_series(G, o.degree_cap);
            Json j;
            j["order"] = static_cast<long long>(G.order());
            Json cs = Json::array();
            for (const Rat& c : coeffs) cs.push_back(rat_to_json(c));
            j["coefficients"] = std::move(cs);
            return j;
        };
    });

    auto* re_cmd = add_common(app.add_subcommand("reynolds", "Reynolds average of a polynomial"),
                              true);
    re_cmd->callback([&]() {
        handler = [](const CliOptions& o, std::istream& is) {
            Json payload = read_payload(o, is);
            std::vector<RatMat> gens;
            for (const auto& g : payload.at("generators")) gens.push_back(rat_matrix_from_json(g));
            FiniteMatrixGroup G(std::move(gens));
            return to_json(reynolds(G, polynomial_from_json(payload.at("polynomial"))));
        };
    });

    auto* nc_cmd = add_common(app.add_subcommand("nullcone", "strict half-space witness"), true);
    nc_cmd->callback([&]() {
        handler = [](const CliOptions& o, std::istream& is) {
            Json payload = read_payload(o, is);
            auto res = torus_nullcone(weights_from_json(payload.at("support")));
            Json j;
            j["lambda"] = res ? int_vector_to_json(*res) : Json(nullptr);
            return j;
        };
    });

    auto* ke_cmd = add_common(app.add_subcommand("kempf", "most efficient destabilizing lambda"),
                              true);
    ke_cmd->callback([&]() {
        handler = [](const CliOptions& o, std::istream& is) {
            Json payload = read_payload(o, is);
            auto res = kempf_optimal(weights_from_json(payload.at("support")));
            Json j;
            if (res) {
                j["lambda"] = int_vector_to_json(res->lambda);
                j["efficiency_sq"] = rat_to_json(res->efficiency_sq);
                j["m"] = int_to_json(res->m);
                j["norm_sq"] = int_to_json(res->norm_sq);
            } else {
                j["lambda"] = nullptr;
            }
            return j;
        };
    });

    // ---- corpus ----
    auto* co_cmd = add_common(app.add_subcommand("corpus", "cross-engine equivalence sweep"),
                              false);
    co_cmd->add_option("--max-size", opt.max_size, "bound on |alpha|+|beta| (default 8)");
    co_cmd->add_option("--rank", opt.rank, "height bound (default 4)");
    co_cmd->callback([&]() {
        handler = [&raw_text, &raw_text_output](const CliOptions& o, std::istream&) {
            int height = o.rank > 0 ? o.rank : 4;
            CorpusReport report =
                corpus_sweep(o.max_size, height, std::thread::hardware_concurrency());
            raw_text = corpus_table(report);
            raw_text_output = true;
            Json j;
            j["max_size"] = report.max_size;
            j["max_height"] = report.max_height;
            j["triples"] = report.triples;
            j["mismatches"] = report.mismatches;
            return j;
        };
    });

    try {
        std::vector<std::string> argv(args);
        std::reverse(argv.begin(), argv.end());
        app.name("gct");
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        Json result = handler(opt, in);
        bool failed =
            result.contains("mismatches") && result["mismatches"].get<long long>() > 0;
        if (raw_text_output) out << raw_text;
        write_output(opt, out, std::move(result));
        return failed ? 1 : 0;
    } catch (const CLI::ValidationError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace gct
