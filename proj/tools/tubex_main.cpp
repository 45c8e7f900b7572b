#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tubex/families.hpp"
#include "tubex/json_io.hpp"
#include "tubex/series.hpp"
#include "tubex/verify.hpp"

namespace {

using namespace tubex;

// key=value lines; '#' starts a comment; recognized keys become flag defaults
std::map<std::string, std::string> read_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw file_error("cannot open config " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            s.erase(0, s.find_first_not_of(" \t\r"));
            auto e = s.find_last_not_of(" \t\r");
            s.erase(e == std::string::npos ? 0 : e + 1);
            return s;
        };
        std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
        if (!key.empty()) kv[key] = val;
    }
    return kv;
}

int resolve_threads(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("TUBEX_THREADS")) {
        int t = std::atoi(env);
        if (t > 0) return t;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

struct GraphSource {
    std::string file;    // -g
    std::string family;  // --family (kebab or alias)
    int n = -1;
    int j = 0, k = 0;    // wand
    std::string base;    // omni

    void add_flags(CLI::App* cmd, bool family_only = false) {
        if (!family_only)
            cmd->add_option("-g,--graph", file, "graph JSON file");
        cmd->add_option("-f,--family", family, "built-in family name");
        cmd->add_option("-n,--n", n, "family index n");
        cmd->add_option("--j", j, "wand handle length");
        cmd->add_option("--k", k, "wand tail length");
        cmd->add_option("--base", base, "omni base: path | cycle | complete");
    }

    FamilyId id(int at_n) const {
        FamilyId fid;
        fid.name = family_tag(family);
        fid.n = at_n;
        fid.j = j;
        fid.k = k;
        fid.base = base;
        return fid;
    }

    DeltaGraph load() const {
        if (!file.empty()) return graph_from_file(file);
        if (family.empty()) throw input_error("need -g FILE or --family NAME");
        if (n < 0) throw input_error("--family needs --n");
        return build(id(n));
    }
};

std::string csv_row(const std::vector<Int>& v) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ",";
        out << v[i];
    }
    return out.str();
}

// ambient dimension: documented value for families, tubing-complex rank for files
int ambient_dim(const GraphSource& src, const FVector& fv) {
    if (!src.family.empty()) return family_dimension(src.id(src.n));
    return static_cast<int>(fv.counts.size()) - 1;
}

void cmd_tubes(const GraphSource& src) {
    DeltaGraph g = src.load();
    for (const Tube& t : g.tubes())
        std::cout << g.complex().ground().label_set(t) << "\n";
}

void cmd_fvector(const GraphSource& src, int threads, bool as_json) {
    DeltaGraph g = src.load();
    FVector fv = g.fvector(threads);
    FVector pf = fv.polytope_form(ambient_dim(src, fv));
    if (as_json) {
        std::cout << fvector_json(pf) << "\n" << fvector_json(fv) << "\n";
    } else {
        std::cout << "faces-by-dimension: " << csv_row(pf.counts) << "\n";
        std::cout << "tubings-by-size: " << csv_row(fv.counts) << "\n";
    }
}

void cmd_count_max(const GraphSource& src, int threads) {
    if (src.family.empty()) {
        std::cout << src.load().maximal_tubing_count(threads) << "\n";
        return;
    }
    if (src.n < 0) throw input_error("--family needs --n");
    std::vector<Int> counts;
    for (int m = 0; m <= src.n; ++m)
        counts.push_back(build(src.id(m)).maximal_tubing_count(threads));
    std::cout << csv_row(counts) << "\n";
}

void cmd_series(const std::string& family, int kmax, int nmax) {
    std::cout << series_triangle_json(family_series(family_tag(family), kmax, nmax))
              << "\n";
}

void cmd_verify(int n_max, int threads, bool as_json,
                const std::vector<std::string>& only) {
    std::vector<CheckReport> reports = run_all(n_max, threads);
    if (!only.empty()) {
        std::vector<CheckReport> kept;
        for (const auto& r : reports)
            if (std::find(only.begin(), only.end(), r.id) != only.end())
                kept.push_back(r);
        if (kept.empty()) throw input_error("no such check id; see verify --list");
        reports = std::move(kept);
    }
    // wall-clock stripped so output is identical across runs and thread counts
    for (auto& r : reports) r.ms = 0;
    if (as_json) {
        std::cout << reports_json(reports) << "\n";
    } else {
        for (const auto& r : reports) {
            std::cout << r.id << " [" << r.params << "] " << r.status;
            if (!r.witness.empty()) std::cout << " :: " << r.witness;
            std::cout << " (" << r.assertions << " checks)\n";
        }
    }
    if (any_hard_failure(reports)) throw domain_error("verification failed");
}

void cmd_skeleton(const GraphSource& src, bool dot) {
    DeltaGraph g = src.load();
    std::vector<Tubing> mts = g.maximal_tubings();
    std::sort(mts.begin(), mts.end(), [](const Tubing& a, const Tubing& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i].bits != b[i].bits) return a[i].bits < b[i].bits;
        return false;
    });
    const GroundSet& gr = g.complex().ground();
    auto label = [&](const Tubing& t) {
        std::string out;
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (i) out += ",";
            out += gr.label_set(t[i]);
        }
        return out;
    };
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < mts.size(); ++i)
        for (std::size_t j = i + 1; j < mts.size(); ++j) {
            std::size_t shared = 0;
            for (const Tube& t : mts[i])
                if (std::find(mts[j].begin(), mts[j].end(), t) != mts[j].end())
                    ++shared;
            if (mts[i].size() >= 1 && shared == mts[i].size() - 1 &&
                mts[i].size() == mts[j].size())
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    if (dot) {
        std::cout << "graph skeleton {\n";
        for (std::size_t i = 0; i < mts.size(); ++i)
            std::cout << "  " << i << " [label=\"" << label(mts[i]) << "\"];\n";
        for (auto [a, b] : edges) std::cout << "  " << a << " -- " << b << ";\n";
        std::cout << "}\n";
    } else {
        std::cout << "vertices: " << mts.size() << "\nedges: " << edges.size() << "\n";
    }
}

void cmd_realize(const GraphSource& src, bool as_json, bool as_obj, bool approx) {
    DeltaGraph g = src.load();
    RealizedPolytope p = realize_standard_cut(g);
    if (as_obj) {
        std::cout << realization_obj(p);
        return;
    }
    if (as_json) {
        if (approx) {
            // display-only decimal rendering; the exact form is the default
            nlohmann::ordered_json o;
            o["dim"] = p.dim;
            auto verts = nlohmann::ordered_json::array();
            for (const auto& v : p.vertices) {
                auto pt = nlohmann::ordered_json::array();
                for (const Rat& x : v.point) pt.push_back(static_cast<double>(x));
                verts.push_back(std::move(pt));
            }
            o["vertices"] = std::move(verts);
            auto edges = nlohmann::ordered_json::array();
            for (auto [a, b] : p.edges)
                edges.push_back(nlohmann::ordered_json::array({a, b}));
            o["edges"] = std::move(edges);
            std::cout << o.dump(2) << "\n";
        } else {
            std::cout << realization_json(g.complex().ground(), p) << "\n";
        }
        return;
    }
    std::cout << "dim: " << p.dim << "\nvertices: " << p.vertices.size()
              << "\nfacets: " << p.facets.size() << "\nedges: " << p.edges.size()
              << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"exact enumeration for tubing complexes on signed ground sets"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "key=value defaults: threads, nmax, kmax");
    int threads = 0;
    app.add_option("--threads", threads, "worker threads (default: TUBEX_THREADS or cores)");

    GraphSource tubes_src, fv_src, cm_src, sk_src, re_src;

    CLI::App* c_tubes = app.add_subcommand("tubes", "list the tubes of a graph");
    tubes_src.add_flags(c_tubes);

    CLI::App* c_fv = app.add_subcommand("fvector", "face counts in both conventions");
    fv_src.add_flags(c_fv);
    bool fv_json = false;
    c_fv->add_flag("--json", fv_json, "emit JSON arrays of decimal strings");

    CLI::App* c_cm = app.add_subcommand("count-max",
                                        "maximal tubing counts for n = 0..N");
    cm_src.add_flags(c_cm);

    CLI::App* c_series = app.add_subcommand("series", "generating function tools");
    CLI::App* c_expand = c_series->add_subcommand("expand", "triangle of coefficients");
    std::string series_family;
    int nmax = 8, kmax = -1;
    c_expand->add_option("-f,--family", series_family, "family name")->required();
    c_expand->add_option("--nmax", nmax, "row bound");
    c_expand->add_option("--kmax", kmax, "column bound (default nmax)");

    CLI::App* c_verify = app.add_subcommand("verify", "run the structural check catalog");
    bool verify_all = false, verify_json = false, verify_list = false;
    int verify_nmax = 4;
    std::vector<std::string> verify_only;
    c_verify->add_flag("--all", verify_all, "run every check (default)");
    c_verify->add_option("--n-max", verify_nmax, "size bound for the battery");
    c_verify->add_option("--check", verify_only, "run only the named check ids");
    c_verify->add_flag("--json", verify_json, "emit the JSON report array");
    c_verify->add_flag("--list", verify_list, "print the catalog and exit");

    CLI::App* c_sk = app.add_subcommand("skeleton", "flip graph on maximal tubings");
    sk_src.add_flags(c_sk);
    bool sk_dot = false;
    c_sk->add_flag("--dot", sk_dot, "emit DOT");

    CLI::App* c_re = app.add_subcommand("realize", "standard-cut coordinates");
    re_src.add_flags(c_re);
    bool re_json = false, re_obj = false, re_approx = false;
    c_re->add_flag("--json", re_json, "emit exact coordinates as JSON");
    c_re->add_flag("--obj", re_obj, "emit Wavefront OBJ (dimension 3)");
    c_re->add_flag("--approx", re_approx, "decimal rendering for geometry export");

    CLI::App* c_fam = app.add_subcommand("families", "list built-in family names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);  // prints help or the usage message
        return code == 0 ? 0 : 2;
    }

    if (!config_path.empty()) {
        auto kv = read_config(config_path);
        if (kv.count("threads") && app.count("--threads") == 0)
            threads = std::stoi(kv["threads"]);
        if (kv.count("nmax") && c_expand->count("--nmax") == 0)
            nmax = std::stoi(kv["nmax"]);
        if (kv.count("kmax") && c_expand->count("--kmax") == 0)
            kmax = std::stoi(kv["kmax"]);
    }
    threads = resolve_threads(threads);

    if (c_tubes->parsed()) cmd_tubes(tubes_src);
    if (c_fv->parsed()) cmd_fvector(fv_src, threads, fv_json);
    if (c_cm->parsed()) cmd_count_max(cm_src, threads);
    if (c_series->parsed()) {
        if (!c_expand->parsed()) throw input_error("series needs a subcommand: expand");
        cmd_series(series_family, kmax < 0 ? nmax : kmax, nmax);
    }
    if (c_verify->parsed()) {
        if (verify_list) {
            for (const auto& id : verify_catalog()) std::cout << id << "\n";
        } else {
            cmd_verify(verify_nmax, threads, verify_json, verify_only);
        }
    }
    if (c_sk->parsed()) cmd_skeleton(sk_src, sk_dot);
    if (c_re->parsed()) cmd_realize(re_src, re_json, re_obj, re_approx);
    if (c_fam->parsed())
        for (const auto& name : family_names()) std::cout << name << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const file_error& e) {
        std::cerr << "file error: " << e.what() << "\n";
        return 3;
    } catch (const capacity_error& e) {
        std::cerr << "capacity exceeded: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
