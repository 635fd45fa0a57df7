#include "index3d/index3d.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace index3d;

namespace {

enum ExitCode { kOk = 0, kIo = 1, kUsage = 2, kMath = 3 };

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string isosig;
    std::string gluing;
    std::string class_vector;
    std::string peripheral;
    std::string file;
    std::string move;
    std::string order = "10";
    std::string format = "text";
    bool strict_convergence = false;
    IndexLimits limits;
};

GluingData load_input(const Options& o) {
    if (!o.gluing.empty() && !o.isosig.empty()) throw UsageError("give either --gluing or --isosig, not both");
    if (!o.gluing.empty()) return load_gluing_file(o.gluing);
    if (!o.isosig.empty()) return gluing_from_triangulation(decode_isosig(o.isosig));
    throw UsageError("an input is required: --gluing FILE or --isosig SIG");
}

Triangulation load_triangulation(const Options& o) {
    if (o.isosig.empty()) throw UsageError("--isosig is required");
    return decode_isosig(o.isosig);
}

std::vector<HalfInt> parse_peripheral(const std::string& text) {
    std::vector<HalfInt> out;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) out.push_back(HalfInt::parse(tok));
    return out;
}

void print_matrix(const IntMatrix& M) {
    for (std::size_t i = 0; i < M.rows(); ++i) {
        for (std::size_t j = 0; j < M.cols(); ++j) std::cout << (j ? " " : "") << M(i, j);
        std::cout << "\n";
    }
}

void print_index(const IndexResult& r, const Options& o) {
    if (o.strict_convergence && r.verdict != Verdict::Converged)
        throw DivergenceSuspected("index sum did not converge: " + to_string(r.verdict) +
                                  (r.witness_direction.empty() ? "" : " along [" + render_quad(r.witness_direction) + "]"));
    if (o.format == "machine") {
        nlohmann::json j;
        j["series"] = nlohmann::json::parse(r.series.to_machine());
        j["verdict"] = to_string(r.verdict);
        j["terms"] = r.terms_included;
        j["shells"] = r.shells_explored;
        j["points"] = r.points_visited;
        j["limits"] = {{"initial_radius", r.limits.initial_radius},
                       {"stabilization_shells", r.limits.stabilization_shells},
                       {"max_radius", r.limits.max_radius}};
        if (!r.witness_direction.empty()) j["witness_direction"] = r.witness_direction;
        std::cout << j.dump() << "\n";
        return;
    }
    std::cout << r.series.to_text() << "\n";
    std::cout << "# verdict " << to_string(r.verdict) << ", terms " << r.terms_included << ", shells "
              << r.shells_explored << ", points " << r.points_visited << ", limits " << r.limits.initial_radius << "/"
              << r.limits.stabilization_shells << "/" << r.limits.max_radius;
    if (!r.witness_direction.empty()) std::cout << ", direction [" << render_quad(r.witness_direction) << "]";
    std::cout << "\n";
}

int run_verify_path(const Options& o) {
    if (o.file.empty()) throw UsageError("--file is required");
    int status = kOk;
    for (const Path& p : load_path_file(o.file)) {
        try {
            PathReport rep = verify_path(p, false);
            std::cout << "OK " << rep.steps << " steps\n";
        } catch (const StepMismatch& e) {
            std::cout << "MISMATCH at step " << e.step() << ": got " << e.got() << ", expected " << e.expected() << "\n";
            status = kMath;
        }
    }
    return status;
}

int dispatch(const std::string& cmd, const Options& o) {
    if (o.format != "text" && o.format != "machine") throw UsageError("--format must be text or machine");
    const HalfInt order = HalfInt::parse(o.order);
    if (cmd == "decode") {
        Triangulation t = load_triangulation(o);
        for (int i = 0; i < t.size(); ++i) {
            std::cout << i << ":";
            for (int f = 0; f < 4; ++f) {
                const FaceGluing& g = t.gluing(i, f);
                std::cout << "  " << g.tet << " (" << g.perm[0] << g.perm[1] << g.perm[2] << g.perm[3] << ")";
            }
            std::cout << "\n";
        }
        int cusps = 0;
        vertex_classes(t, &cusps);
        std::cout << "# tetrahedra " << t.size() << ", edges " << edge_classes(t).classes.size() << ", cusps " << cusps
                  << "\n";
    } else if (cmd == "encode") {
        std::cout << encode_isosig(load_triangulation(o)) << "\n";
    } else if (cmd == "edges") {
        std::cout << to_fixture_text(gluing_from_triangulation(load_triangulation(o)));
    } else if (cmd == "qmatch") {
        print_matrix(qmatching_matrix(load_input(o)));
    } else if (cmd == "index") {
        GluingData g = load_input(o);
        QuadVector S0 = o.class_vector.empty() ? QuadVector{} : parse_quad(o.class_vector);
        print_index(index(IndexRequest{g, S0, order, o.limits}), o);
    } else if (cmd == "index-peripheral") {
        if (o.peripheral.empty()) throw UsageError("--peripheral is required");
        print_index(index_peripheral(load_input(o), parse_peripheral(o.peripheral), order, o.limits), o);
    } else if (cmd == "angles") {
        GluingData g = load_input(o);
        std::cout << "generalised: " << render_angles(solve_generalised_angles(g)) << "\n";
        if (g.has_cusp_rows()) std::cout << "vanishing holonomy: " << render_angles(solve_vanishing_holonomy(g)) << "\n";
    } else if (cmd == "strict") {
        GluingData g = load_input(o);
        auto res = g.has_cusp_rows() ? strict_exists_vanishing_holonomy(g) : strict_angle_structure(g);
        if (auto* s = std::get_if<StrictAngles>(&res))
            std::cout << "strict: " << render_angles(s->alpha) << "\n";
        else {
            const auto& w = std::get<FarkasWitness>(res);
            std::cout << "none; witness [" << render_quad(w.surface) << "] chi " << to_string(w.chi) << "\n";
        }
    } else if (cmd == "efficiency") {
        std::cout << render_report(efficiency_report(load_input(o)));
    } else if (cmd == "move") {
        if (o.move.empty()) throw UsageError("--move is required");
        std::cout << encode_isosig(apply_move(load_triangulation(o), MoveSpec::parse(o.move))) << "\n";
    } else if (cmd == "verify-path") {
        return run_verify_path(o);
    } else if (cmd == "identities") {
        int status = kOk;
        for (const auto& r : {check_quadratic_identity(), check_pentagon_identity(), check_generating_sum()}) {
            std::cout << r.name << ": " << (r.failed ? "FAIL" : "OK") << " " << r.checked - r.failed << "/" << r.checked;
            if (r.failed) std::cout << " first failure " << r.first_failure;
            std::cout << "\n";
            if (r.failed) status = kMath;
        }
        return status;
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"3D-index of ideal triangulations"};
    app.require_subcommand(1, 1);
    Options o;
    auto input = [&o](CLI::App* sub, bool gluing) {
        sub->add_option("--isosig", o.isosig, "isomorphism signature");
        if (gluing) sub->add_option("--gluing", o.gluing, "gluing-matrix fixture file");
    };
    auto series_opts = [&o](CLI::App* sub) {
        sub->add_option("--order", o.order, "truncation order as a q-exponent, halves allowed (e.g. 21/2)");
        sub->add_option("--format", o.format, "text or machine");
        sub->add_flag("--strict-convergence", o.strict_convergence, "fail unless the sum converged");
        sub->add_option("--initial-radius", o.limits.initial_radius, "first shell radius checked for stabilisation");
        sub->add_option("--stabilization-shells", o.limits.stabilization_shells, "quiet shells needed to stop");
        sub->add_option("--max-radius", o.limits.max_radius, "largest shell radius");
    };
    input(app.add_subcommand("decode", "print the gluings of an isoSig"), false);
    input(app.add_subcommand("encode", "print the canonical isoSig"), false);
    input(app.add_subcommand("edges", "print the edge equation matrix"), false);
    input(app.add_subcommand("qmatch", "print the Q-matching matrix"), true);
    auto* idx = app.add_subcommand("index", "index over the edge-solution lattice");
    input(idx, true);
    series_opts(idx);
    idx->add_option("--class", o.class_vector, "base class as quad coordinates");
    auto* per = app.add_subcommand("index-peripheral", "index of a peripheral class");
    input(per, true);
    series_opts(per);
    per->add_option("--peripheral", o.peripheral, "p1 q1 p2 q2 ... (halves allowed)");
    input(app.add_subcommand("angles", "generalised angle structures"), true);
    input(app.add_subcommand("strict", "strict angle structure or obstruction"), true);
    input(app.add_subcommand("efficiency", "1-efficiency report"), true);
    auto* mv = app.add_subcommand("move", "apply a Pachner move");
    input(mv, false);
    mv->add_option("--move", o.move, "table integer, 2-3:f, 3-2:e, 2-0:e or 0-2:e,f,g");
    app.add_subcommand("verify-path", "replay Pachner path tables")->add_option("--file", o.file, "path file");
    app.add_subcommand("identities", "check tetrahedral index identities");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }
    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        return dispatch(cmd, o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIo;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ShapeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const MalformedSignature& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMath;
    }
}
