// Command-line front end: generation, expansion, decomposition and
// verification with stable JSON output on stdout.

#include <CLI11.hpp>
#include <iostream>

#include "acluster/json_io.hpp"
#include "acluster/verify.hpp"

using namespace acluster;

namespace {

Cluster parse_cluster(const std::string& s) {
    if (s == "initial") return Cluster::initial;
    if (s == "cyclic") return Cluster::cyclic;
    if (s == "z-cyclic") return Cluster::z_cyclic;
    throw CLI::ValidationError("--cluster", "expected initial, cyclic or z-cyclic");
}

Vec3 parse_vec3(const std::string& s) {
    Vec3 v{};
    size_t pos = 0;
    for (int i = 0; i < 3; ++i) {
        size_t next = s.find(',', pos);
        std::string tok = s.substr(pos, next == std::string::npos ? next : next - pos);
        v[i] = std::stoll(tok);
        if (i < 2) {
            if (next == std::string::npos) throw CLI::ValidationError("vector", "expected a,b,c");
            pos = next + 1;
        }
    }
    return v;
}

Json seed_to_json(const SeedLabel& label, const Seed& s) {
    Json j;
    j["label"] = label.str();
    Json h = Json::array();
    for (const auto& row : s.H) h.push_back(std::vector<int64_t>(row.begin(), row.end()));
    j["H"] = h;
    Json coeffs = Json::array();
    for (const auto& y : s.coeffs) coeffs.push_back(trop_to_json(y));
    j["coeffs"] = coeffs;
    Json cluster = Json::array();
    for (const auto& v : s.cluster) cluster.push_back(laurent_to_json(v));
    j["cluster"] = cluster;
    return j;
}

Json laurent_doc(const ClusterLaurent& v) {
    Json j;
    j["cluster"] = cluster_name(v.ref());
    j["terms"] = laurent_to_json(v);
    return j;
}

BasisElement parse_basis(const std::string& text) {
    auto b = GenMonomial::parse(text).classify();
    if (!b) throw CLI::ValidationError("--b", "not a basis element: " + text);
    return *b;
}

const char* basis_tag(const BasisElement& b) {
    switch (b.tag) {
        case BasisElement::Tag::one: return "one";
        case BasisElement::Tag::cluster_monomial: return "monomial";
        case BasisElement::Tag::u_power: return "u";
        case BasisElement::Tag::u_w: return "uw";
        case BasisElement::Tag::u_z: return "uz";
    }
    return "?";
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations in the cluster algebra of affine type A_2^(1)"};
    app.require_subcommand(1);

    int64_t arg_m = 4, arg_n = 1, arg_window = 8, arg_radius = 4;
    std::string arg_cluster = "initial", arg_what = "x", arg_vec, arg_monomial, arg_b, arg_suite = "all";
    bool arg_cyclic = false;

    auto* seed_cmd = app.add_subcommand("seed", "a seed of the exchange graph walk");
    seed_cmd->add_option("--m", arg_m, "label index")->required();
    seed_cmd->add_flag("--cyclic", arg_cyclic, "the cyclic seed Sigma_m^cyc");

    auto* var_cmd = app.add_subcommand("var", "expansion of the cluster variable x_m");
    var_cmd->add_option("--m", arg_m)->required();
    var_cmd->add_option("--cluster", arg_cluster, "initial|cyclic");

    auto* u_cmd = app.add_subcommand("u", "expansion of u_n");
    u_cmd->add_option("--n", arg_n)->required();
    u_cmd->add_option("--cluster", arg_cluster, "initial|cyclic");

    auto* coeffs_cmd = app.add_subcommand("coeffs", "coefficient tables of the walk");
    coeffs_cmd->add_option("--window", arg_window);

    auto* cf_cmd = app.add_subcommand("closed-form", "closed-form evaluators");
    cf_cmd->add_option("--what", arg_what, "x|u|F|g|d")->required();
    cf_cmd->add_option("--m", arg_m);
    cf_cmd->add_option("--n", arg_n, "u-index (selects u_n when given)")->default_val(int64_t{0});
    cf_cmd->add_option("--cluster", arg_cluster);

    auto* dec_cmd = app.add_subcommand("decompose", "basis element with a given denominator vector");
    dec_cmd->add_option("--d", arg_vec, "l,m,n")->required();

    auto* gvec_cmd = app.add_subcommand("gvec", "basis element with a given g-vector");
    gvec_cmd->add_option("--g", arg_vec, "a,b,c")->required();
    gvec_cmd->add_option("--cluster", arg_cluster);

    auto* expand_cmd = app.add_subcommand("expand", "expansion of a monomial into the atomic basis");
    expand_cmd->add_option("--monomial", arg_monomial, "e.g. u1*x4^2*w")->required();

    auto* newton_cmd = app.add_subcommand("newton", "Newton polygon of a basis element");
    newton_cmd->add_option("--b", arg_b, "e.g. x7, u3, w")->required();
    newton_cmd->add_option("--cluster", arg_cluster);

    auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
    verify_cmd->add_option("--suite", arg_suite, "suite name or all");
    verify_cmd->add_option("--window", arg_window);

    auto* fan_cmd = app.add_subcommand("dump-fan", "CSV of the cone decomposition of a lattice ball");
    fan_cmd->add_option("--radius", arg_radius);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*seed_cmd) {
            Walk walk = walk_exchange_graph(World::initial().sigma1(),
                                            std::max<int64_t>(std::abs(arg_m), 1));
            SeedLabel label{arg_cyclic ? SeedLabel::Kind::cyclic : SeedLabel::Kind::straight, arg_m};
            emit(seed_to_json(label, walk.at(label)));
        } else if (*var_cmd) {
            Cluster c = parse_cluster(arg_cluster);
            const World& w = c == Cluster::cyclic ? World::cyclic() : World::initial();
            emit(laurent_doc(w.x(arg_m)));
        } else if (*u_cmd) {
            Cluster c = parse_cluster(arg_cluster);
            const World& w = c == Cluster::cyclic ? World::cyclic() : World::initial();
            emit(laurent_doc(w.u(arg_n)));
        } else if (*coeffs_cmd) {
            CoeffTables t = gen_y_families(World::initial(), arg_window);
            Json rows = Json::array();
            for (const auto& [m, ys] : t.y) {
                Json row;
                row["m"] = m;
                Json a = Json::array(), b = Json::array();
                for (int i = 0; i < 3; ++i) a.push_back(trop_to_json(ys[i]));
                for (int i = 0; i < 3; ++i) b.push_back(trop_to_json(t.ycyc.at(m)[i]));
                row["y"] = a;
                row["ycyc"] = b;
                rows.push_back(row);
            }
            Json j;
            j["window"] = arg_window;
            j["rows"] = rows;
            emit(j);
        } else if (*cf_cmd) {
            Cluster c = parse_cluster(arg_cluster);
            if (arg_what == "x") {
                emit(laurent_doc(c == Cluster::cyclic ? cf_x_cyclic(arg_m) : cf_x_initial(arg_m)));
            } else if (arg_what == "u") {
                emit(laurent_doc(c == Cluster::cyclic ? cf_u_cyclic(arg_n) : cf_u_initial(arg_n)));
            } else {
                Elem e = arg_n > 0 ? Elem::U(arg_n) : Elem::X(arg_m);
                Json j;
                j["cluster"] = cluster_name(c);
                if (arg_what == "F") j["F"] = ycoeff_to_json(cf_F(e, c));
                else if (arg_what == "g") j["g"] = std::vector<int64_t>{cf_g(e, c).begin(), cf_g(e, c).end()};
                else if (arg_what == "d") j["d"] = std::vector<int64_t>{cf_d(e, c).begin(), cf_d(e, c).end()};
                else throw CLI::ValidationError("--what", "expected x, u, F, g or d");
                emit(j);
            }
        } else if (*dec_cmd) {
            Vec3 d = parse_vec3(arg_vec);
            BasisElement b = decompose_d(d);
            Json j;
            j["basis"] = b.str();
            Vec3 check = d_of_basis(b, Cluster::initial);
            j["check"] = std::vector<int64_t>(check.begin(), check.end());
            emit(j);
        } else if (*gvec_cmd) {
            Cluster c = parse_cluster(arg_cluster);
            Vec3 g = parse_vec3(arg_vec);
            BasisElement b = g_inverse(g, c);
            Json j;
            j["basis"] = b.str();
            Vec3 check = g_of_basis(b, c);
            j["g"] = std::vector<int64_t>(check.begin(), check.end());
            emit(j);
        } else if (*expand_cmd) {
            BasisCombo combo = expand_rewrite(GenMonomial::parse(arg_monomial));
            Json terms = Json::array();
            for (const auto& [b, coeff] : combo.terms) {
                Json t;
                t["basis"] = b.str();
                t["ycoeff"] = ycoeff_to_json(coeff);
                terms.push_back(t);
            }
            Json j;
            j["terms"] = terms;
            emit(j);
        } else if (*newton_cmd) {
            Cluster c = parse_cluster(arg_cluster);
            LatticePolygon poly = newton_polygon(parse_basis(arg_b), c);
            Json verts = Json::array();
            for (const Vec3& v : poly.vertices) verts.push_back(std::vector<int64_t>(v.begin(), v.end()));
            Json j;
            j["cluster"] = cluster_name(c);
            j["vertices"] = verts;
            j["plane_normal"] = std::vector<int64_t>(poly.plane_normal.begin(), poly.plane_normal.end());
            j["plane_value"] = poly.plane_value;
            emit(j);
        } else if (*verify_cmd) {
            std::vector<SuiteResult> results;
            if (arg_suite == "all") results = run_all_suites(static_cast<int>(arg_window));
            else results.push_back(run_suite(arg_suite, static_cast<int>(arg_window)));
            Json suites = Json::array();
            bool ok = true;
            for (const SuiteResult& r : results) {
                Json s;
                s["suite"] = r.suite;
                s["cases"] = r.cases;
                s["failures"] = r.failures;
                suites.push_back(s);
                ok = ok && r.passed();
            }
            Json j;
            j["window"] = arg_window;
            j["suites"] = suites;
            emit(j);
            return ok ? 0 : 1;
        } else if (*fan_cmd) {
            std::cout << "d1,d2,d3,basis_tag,label\n";
            for (int64_t a = -arg_radius; a <= arg_radius; ++a)
                for (int64_t b = -arg_radius; b <= arg_radius; ++b)
                    for (int64_t c = -arg_radius; c <= arg_radius; ++c) {
                        BasisElement e = decompose_d({a, b, c});
                        std::cout << a << "," << b << "," << c << "," << basis_tag(e) << "," << e.str()
                                  << "\n";
                    }
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
