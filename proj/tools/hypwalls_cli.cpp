// Command line front end: classify isometries, print walls, assemble domains,
// enumerate Bianchi ideal points, run DF checks, reduce points, render slices.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypwalls/fixtures.hpp"
#include "hypwalls/json_io.hpp"
#include "hypwalls/svg.hpp"

namespace hw = hypwalls;

namespace {

bool g_json_out = false;

// Reports are built as JSON; without --json a one-line digest is printed.
void emit(const std::string& report, const std::function<std::string(const nlohmann::json&)>& digest) {
    if (g_json_out) {
        std::cout << report << "\n";
        return;
    }
    std::cout << digest(nlohmann::json::parse(report)) << "\n";
}

constexpr int kExitInputError = 2;
constexpr int kExitInconclusive = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw hw::IOError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

hw::GroupSpec load_group(const std::string& spec_or_path) {
    if (spec_or_path == "gamma2") return hw::fixtures::gamma2();
    if (spec_or_path == "psl2z") return hw::fixtures::psl2z();
    if (spec_or_path == "figure8") return hw::fixtures::figure_eight();
    return hw::parse_group(read_file(spec_or_path));
}

hw::HalfSpacePoint parse_point(const std::string& text) {
    double re = 0, im = 0, r = 0;
    char c1 = 0, c2 = 0;
    std::istringstream ss(text);
    if (!(ss >> re >> c1 >> im >> c2 >> r) || c1 != ',' || c2 != ',') {
        throw hw::ParseError("point must be \"re,im,r\"");
    }
    if (!(r > 0)) throw hw::ParseError("point height r must be positive");
    return {hw::Complex{re, im}, r};
}

hw::SliceSpec parse_slice(const std::string& text) {
    hw::SliceSpec slice;
    if (text.rfind("im=", 0) == 0) {
        slice.axis = hw::SliceSpec::Axis::ImEquals;
        slice.value = std::stod(text.substr(3));
    } else if (text.rfind("re=", 0) == 0) {
        slice.axis = hw::SliceSpec::Axis::ReEquals;
        slice.value = std::stod(text.substr(3));
    } else {
        throw hw::ParseError("slice must be im=<value> or re=<value>");
    }
    return slice;
}

struct DomainRun {
    hw::GroupSpec group;
    hw::DomainSpec dom;
    std::vector<hw::Face> face_list;
};

DomainRun build_group_domain(const std::string& gens, int max_word_len, double norm_bound,
                             int samples, unsigned seed, int threads) {
    DomainRun run;
    run.group = load_group(gens);
    const auto elements = hw::enumerate_group(run.group, max_word_len, norm_bound);
    run.dom = hw::make_domain(run.group, elements);
    run.face_list = hw::faces(run.dom, samples, seed, threads);
    return run;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Poincare bisectors, isometric spheres and Dirichlet/Ford domains"};
    app.require_subcommand(1);

    double tol = 1e-9;
    if (const char* env = std::getenv("HYPWALLS_TOL")) tol = std::atof(env);
    unsigned seed = 0;
    int threads = 1;
    bool json_out = false;
    app.add_option("--tol", tol, "absolute tolerance (env HYPWALLS_TOL)");
    app.add_option("--seed", seed, "sampling seed");
    app.add_option("--threads", threads, "worker threads for sampling");
    app.add_flag("--json", json_out, "emit JSON reports");

    // classify
    auto* cmd_classify = app.add_subcommand("classify", "isometry type of a matrix");
    std::string matrix_text;
    int max_power = 64;
    cmd_classify->add_option("--matrix", matrix_text, "matrix literal [[a],[b],[c],[d]]")->required();
    cmd_classify->add_option("--max-power", max_power, "power bound for the geometric search");

    // wall
    auto* cmd_wall = app.add_subcommand("wall", "bisector / isometric sphere of a matrix");
    std::string wall_matrix, wall_model = "half", wall_kind = "bisector";
    cmd_wall->add_option("--matrix", wall_matrix, "matrix literal")->required();
    cmd_wall->add_option("--model", wall_model, "half|ball");
    cmd_wall->add_option("--kind", wall_kind, "bisector|isometric");

    // domain
    auto* cmd_domain = app.add_subcommand("domain", "Dirichlet domain from generators");
    std::string dom_gens, dom_render, dom_slice = "im=0";
    int dom_len = 4, dom_samples = 200;
    double dom_norm = 50.0;
    cmd_domain->add_option("--generators", dom_gens, "group JSON file or gamma2|psl2z|figure8")->required();
    cmd_domain->add_option("--max-word-len", dom_len, "word length bound");
    cmd_domain->add_option("--norm-bound", dom_norm, "||gamma||^2 bound");
    cmd_domain->add_option("--samples", dom_samples, "samples per wall");
    cmd_domain->add_option("--render", dom_render, "write an SVG slice to this file");
    cmd_domain->add_option("--slice", dom_slice, "im=<v> or re=<v> (with --render)");

    // bianchi
    auto* cmd_bianchi = app.add_subcommand("bianchi", "Bianchi group data");
    auto* cmd_ip = cmd_bianchi->add_subcommand("ideal-points", "cusps of the fundamental domain");
    auto* cmd_bd = cmd_bianchi->add_subcommand("domain", "Dirichlet domain walls and DF data");
    auto* cmd_be = cmd_bianchi->add_subcommand("enumerate", "group elements up to a norm bound");
    cmd_bianchi->require_subcommand(1);
    int bianchi_d = 1;
    std::int64_t bianchi_norm = 20;
    std::string bianchi_render, bianchi_slice = "im=0";
    int bianchi_samples = 200;
    for (auto* c : {cmd_ip, cmd_bd, cmd_be}) c->add_option("--d", bianchi_d, "squarefree d")->required();
    cmd_bd->add_option("--norm-bound", bianchi_norm, "exact ||gamma||^2 bound");
    cmd_bd->add_option("--samples", bianchi_samples, "samples per wall");
    cmd_bd->add_option("--render", bianchi_render, "write an SVG slice to this file");
    cmd_bd->add_option("--slice", bianchi_slice, "im=<v> or re=<v> (with --render)");
    cmd_be->add_option("--norm-bound", bianchi_norm, "exact ||gamma||^2 bound");

    // df-check
    auto* cmd_df = app.add_subcommand("df-check", "Ford == Dirichlet criterion d = conj(a)");
    std::string df_gens;
    int df_len = 4, df_samples = 200;
    double df_norm = 50.0;
    cmd_df->add_option("--generators", df_gens, "group JSON file or gamma2|psl2z|figure8")->required();
    cmd_df->add_option("--max-word-len", df_len, "word length bound");
    cmd_df->add_option("--norm-bound", df_norm, "||gamma||^2 bound");
    cmd_df->add_option("--samples", df_samples, "samples per wall");

    // reduce
    auto* cmd_reduce = app.add_subcommand("reduce", "move a point into the Bianchi domain");
    int reduce_d = 1, reduce_steps = 256;
    std::int64_t reduce_norm = 20;
    std::string reduce_point_text;
    cmd_reduce->add_option("--d", reduce_d, "squarefree d")->required();
    cmd_reduce->add_option("--point", reduce_point_text, "\"re,im,r\"")->required();
    cmd_reduce->add_option("--norm-bound", reduce_norm, "exact ||gamma||^2 bound");
    cmd_reduce->add_option("--max-steps", reduce_steps, "step limit");

    CLI11_PARSE(app, argc, argv);
    hw::set_tolerance(tol);
    g_json_out = json_out;

    try {
        if (*cmd_classify) {
            const hw::MoebiusMatrix m = hw::parse_matrix(matrix_text, tol);
            emit(hw::classify_report_json(m, tol, max_power), [](const nlohmann::json& j) {
                std::ostringstream os;
                os << "class=" << j["class"].get<std::string>()
                   << " trace=[" << j["trace"][0].get<double>() << "," << j["trace"][1].get<double>()
                   << "] n_used=" << j["n_used"].get<int>();
                return os.str();
            });
            return 0;
        }
        if (*cmd_wall) {
            const hw::MoebiusMatrix m = hw::parse_matrix(wall_matrix, tol);
            emit(hw::wall_report_json(m, wall_model, wall_kind, tol), [](const nlohmann::json& j) {
                return "wall " + j["wall"].dump();
            });
            return 0;
        }
        if (*cmd_domain) {
            const DomainRun run =
                build_group_domain(dom_gens, dom_len, dom_norm, dom_samples, seed, threads);
            const hw::DfReport df = hw::df_check(run.group, run.dom, dom_samples, seed);
            emit(hw::domain_report_json(run.dom, run.face_list, df), [](const nlohmann::json& j) {
                std::ostringstream os;
                os << "walls=" << j["walls"].size() << " faces=" << j["faces"].size()
                   << " is_df=" << (j["df"]["is_df"].get<bool>() ? "true" : "false");
                return os.str();
            });
            if (!dom_render.empty()) {
                hw::render_slice_file(run.dom, parse_slice(dom_slice), dom_render, run.face_list);
            }
            return 0;
        }
        if (*cmd_bianchi) {
            const hw::BianchiContext ctx = hw::ring_ctx(bianchi_d);
            if (*cmd_ip) {
                emit(hw::bianchi_ideal_points_json(ctx), [](const nlohmann::json& j) {
                    std::ostringstream os;
                    os << "d=" << j["d"].get<int>() << " class_number=" << j["class_number"].get<int>()
                       << " ideal_points=" << j["ideal_points"].size();
                    return os.str();
                });
                return 0;
            }
            if (*cmd_be) {
                const auto elements = hw::enumerate_bianchi(ctx, bianchi_norm);
                std::cout << "{\"d\": " << bianchi_d << ", \"count\": " << elements.size() << "}\n";
                return 0;
            }
            const hw::DomainSpec dom = hw::bianchi_domain(ctx, bianchi_norm, tol);
            const auto face_list = hw::faces(dom, bianchi_samples, seed, threads);
            hw::GroupSpec spec;  // tags carry the pairings; spec only for the API
            const hw::DfReport df = hw::df_check(spec, dom, bianchi_samples, seed);
            emit(hw::domain_report_json(dom, face_list, df), [](const nlohmann::json& j) {
                std::ostringstream os;
                os << "walls=" << j["walls"].size() << " faces=" << j["faces"].size()
                   << " is_df=" << (j["df"]["is_df"].get<bool>() ? "true" : "false");
                return os.str();
            });
            if (!bianchi_render.empty()) {
                hw::render_slice_file(dom, parse_slice(bianchi_slice), bianchi_render, face_list);
            }
            return 0;
        }
        if (*cmd_df) {
            const DomainRun run =
                build_group_domain(df_gens, df_len, df_norm, df_samples, seed, threads);
            const hw::DfReport df = hw::df_check(run.group, run.dom, df_samples, seed);
            emit(hw::domain_report_json(run.dom, run.face_list, df), [](const nlohmann::json& j) {
                std::ostringstream os;
                os << "is_df=" << (j["df"]["is_df"].get<bool>() ? "true" : "false")
                   << " faces=" << j["faces"].size();
                return os.str();
            });
            return 0;
        }
        if (*cmd_reduce) {
            const hw::BianchiContext ctx = hw::ring_ctx(reduce_d);
            const hw::DomainSpec dom = hw::bianchi_domain(ctx, reduce_norm, tol);
            const hw::HalfSpacePoint input = parse_point(reduce_point_text);
            hw::GroupSpec spec;
            const hw::Reduction red = hw::reduce_point(input, dom, spec, reduce_steps);
            emit(hw::reduce_report_json(input, red), [](const nlohmann::json& j) {
                std::ostringstream os;
                os << "steps=" << j["steps"].get<int>() << " reduced=[" << j["reduced"]["z"][0].get<double>()
                   << "," << j["reduced"]["z"][1].get<double>() << "," << j["reduced"]["r"].get<double>() << "]";
                return os.str();
            });
            return 0;
        }
    } catch (const hw::ParseError& err) {
        std::cerr << "input error: " << err.what() << "\n";
        return kExitInputError;
    } catch (const hw::DeterminantError& err) {
        std::cerr << "input error: " << err.what() << "\n";
        return kExitInputError;
    } catch (const hw::NotSquarefreeError& err) {
        std::cerr << "input error: " << err.what() << "\n";
        return kExitInputError;
    } catch (const hw::InconclusiveError& err) {
        std::cerr << "inconclusive: " << err.what() << "\n";
        return kExitInconclusive;
    } catch (const hw::StepLimitError& err) {
        std::cerr << "step limit: " << err.what() << "\n";
        return kExitInconclusive;
    } catch (const hw::Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 0;
}
