#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nok/chambers.hpp"
#include "nok/errors.hpp"
#include "nok/infinitesimal.hpp"
#include "nok/modelfile.hpp"
#include "nok/polygon.hpp"
#include "nok/positivity.hpp"
#include "nok/zariski.hpp"

namespace {

using nok::DivisorClass;
using nok::QuadraticNumber;
using nok::Rational;
using nok::SurfaceModel;
using ojson = nlohmann::ordered_json;

struct Options {
    std::string model_path, divisor, flag_expr, point = "generic", csv_path, svg_path, out_path, mode = "basepoint";
    int p = 0, r = 1, g = 0;
    long long pell = 0, deg = -1;
    bool count_only = false, json = false, augmented = false;
    std::vector<std::string> ord;  // curve=order entries for an explicit infinitesimal point
};

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw nok::DomainError("cannot write " + path);
    out << content;
}

std::string vertex_list(const nok::NOPolygon& poly) {
    std::string s;
    for (const auto& [t, y] : nok::polygon_vertices(poly)) {
        if (!s.empty()) s += ' ';
        s += "(" + t.str() + ", " + y.str() + ")";
    }
    return s;
}

ojson vertex_json(const nok::NOPolygon& poly) {
    ojson arr = ojson::array();
    for (const auto& [t, y] : nok::polygon_vertices(poly)) arr.push_back({t.str(), y.str()});
    return arr;
}

void emit_polygon_artifacts(const nok::NOPolygon& poly, const Options& opt) {
    if (!opt.csv_path.empty()) write_file(opt.csv_path, nok::polygon_to_csv(poly));
    if (!opt.svg_path.empty()) write_file(opt.svg_path, nok::polygon_to_svg(poly));
}

nok::InfinitesimalPoint parse_infinitesimal_point(const Options& opt) {
    nok::InfinitesimalPoint z;
    if (opt.ord.empty()) return z;
    z.generic = false;
    for (const auto& entry : opt.ord) {
        auto eq = entry.find('=');
        if (eq == std::string::npos) throw nok::ParseError("--ord expects curve=order", 0);
        z.ord_on_E[entry.substr(0, eq)] = std::stoi(entry.substr(eq + 1));
    }
    return z;
}

std::string conditional_stamp(const SurfaceModel& model) {
    return model.complete ? "" : " [model-conditional: curve list not declared complete]";
}

int run(const std::string& cmd, const Options& opt) {
    ojson out;
    if (cmd == "validate") {
        std::ifstream in(opt.model_path);
        if (!in) throw nok::ParseError("cannot open model file: " + opt.model_path, 0);
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        SurfaceModel model = nok::model_from_json(text);  // throws on validation failure
        nok::ValidationReport report = nok::validate_model(model);
        if (opt.json) {
            out["valid"] = true;
            out["name"] = model.name;
            out["rank"] = model.rank();
            out["curves"] = model.curves.size();
            out["signature"] = {report.positive_eigen, report.negative_eigen};
            std::cout << out.dump(2) << '\n';
        } else {
            std::cout << "valid: " << model.name << " (rank " << model.rank() << ", " << model.curves.size()
                      << " curves, signature (" << report.positive_eigen << "," << report.negative_eigen << "))"
                      << conditional_stamp(model) << '\n';
        }
        return 0;
    }
    if (cmd == "delpezzo") {
        SurfaceModel model = nok::del_pezzo_model(opt.r);
        if (!opt.out_path.empty()) nok::save_model(model, opt.out_path);
        if (opt.count_only) {
            auto z = nok::count_chambers_delpezzo(opt.r);
            if (opt.json)
                std::cout << ojson{{"r", opt.r}, {"chambers", z}}.dump(2) << '\n';
            else
                std::cout << z << '\n';
            return 0;
        }
        if (opt.json) {
            out["r"] = opt.r;
            out["curves"] = model.curves.size();
            std::cout << out.dump(2) << '\n';
        } else {
            std::cout << model.curves.size() << " (-1)-curves\n";
        }
        return 0;
    }
    if (cmd == "bounds") {
        if (opt.pell > 0) {
            nok::PellBound b = nok::pell_seshadri_bound(nok::Integer(static_cast<long>(opt.pell)));
            if (opt.json) {
                out["N"] = opt.pell;
                out["p0"] = b.p0.get_str();
                out["q0"] = b.q0.get_str();
                out["bound"] = nok::to_string(b.bound);
                out["note"] = "roles of (p0,q0) calibrated to the known closed forms";
                std::cout << out.dump(2) << '\n';
            } else {
                std::cout << "pell: (p0, q0) = (" << b.p0.get_str() << ", " << b.q0.get_str() << "), bound "
                          << nok::to_string(b.bound) << '\n';
            }
            return 0;
        }
        QuadraticNumber bound = nok::green_bound(opt.g, opt.p);
        long long classical = 2LL * opt.g + 1 + opt.p;
        if (opt.json) {
            out["g"] = opt.g;
            out["p"] = opt.p;
            out["bound"] = bound.str();
            out["classical"] = classical;
            if (opt.deg >= 0) out["inequality_holds"] = nok::green_inequality_holds(nok::Integer(static_cast<long>(opt.deg)), opt.g, opt.p);
            std::cout << out.dump(2) << '\n';
        } else {
            std::cout << "green bound: " << bound.str() << " (classical comparison: " << classical << ")\n";
            if (opt.deg >= 0)
                std::cout << "inequality at deg " << opt.deg << ": "
                          << (nok::green_inequality_holds(nok::Integer(static_cast<long>(opt.deg)), opt.g, opt.p) ? "holds" : "fails")
                          << '\n';
        }
        return 0;
    }

    SurfaceModel model = nok::load_model(opt.model_path);

    if (cmd == "chambers") {
        auto chambers = nok::enumerate_chambers(model);
        if (!opt.csv_path.empty()) write_file(opt.csv_path, nok::chambers_to_csv(chambers));
        if (opt.count_only) {
            if (opt.json)
                std::cout << ojson{{"chambers", chambers.size()}}.dump(2) << '\n';
            else
                std::cout << chambers.size() << '\n';
            return 0;
        }
        if (opt.json) {
            ojson arr = ojson::array();
            for (const auto& c : chambers)
                arr.push_back({{"support", c.curves}, {"indeterminate", c.indeterminate}});
            std::cout << ojson{{"chambers", arr}}.dump(2) << '\n';
        } else {
            for (const auto& c : chambers)
                std::cout << c.str() << (c.indeterminate ? " [indeterminate]" : "") << '\n';
        }
        return 0;
    }

    DivisorClass D = nok::parse_divisor(opt.divisor, model);

    if (cmd == "zariski") {
        auto zd = nok::zariski_decompose(model, D);
        if (opt.json) {
            out["P"] = nok::print_divisor(model, zd.P);
            ojson neg = ojson::object();
            for (const auto& [name, a] : zd.N) neg[name] = nok::to_string(a);
            out["N"] = std::move(neg);
            std::cout << out.dump(2) << '\n';
        } else {
            std::cout << "P = " << nok::print_divisor(model, zd.P) << '\n';
            if (zd.N.empty()) {
                std::cout << "N = 0\n";
            } else {
                std::cout << "N =";
                bool first = true;
                for (const auto& [name, a] : zd.N) {
                    std::cout << (first ? " " : " + ") << nok::to_string(a) << "*" << name;
                    first = false;
                }
                std::cout << '\n';
            }
            if (!model.complete) std::cout << conditional_stamp(model).substr(1) << '\n';
        }
        return 0;
    }
    if (cmd == "volume") {
        Rational v = nok::volume(model, D);
        if (opt.json)
            std::cout << ojson{{"volume", nok::to_string(v)}}.dump(2) << '\n';
        else
            std::cout << nok::to_string(v) << '\n';
        return 0;
    }
    if (cmd == "cohomology") {
        auto h = nok::asymptotic_cohomology(model, D);
        if (opt.json)
            std::cout << ojson{{"h0", nok::to_string(h.h0)}, {"h1", nok::to_string(h.h1)}, {"h2", nok::to_string(h.h2)}}
                             .dump(2)
                      << '\n';
        else
            std::cout << "h0 = " << nok::to_string(h.h0) << ", h1 = " << nok::to_string(h.h1)
                      << ", h2 = " << nok::to_string(h.h2) << '\n';
        return 0;
    }
    if (cmd == "baselocus") {
        auto kind = opt.augmented ? nok::BaseLocusKind::Augmented : nok::BaseLocusKind::Restricted;
        auto locus = nok::base_locus(model, D, kind);
        if (opt.json) {
            std::cout << ojson{{"kind", opt.augmented ? "augmented" : "restricted"}, {"curves", locus.curves}}.dump(2)
                      << '\n';
        } else {
            if (locus.curves.empty()) {
                std::cout << "(empty)\n";
            } else {
                for (const auto& c : locus.curves) std::cout << c << '\n';
            }
        }
        return 0;
    }
    if (cmd == "polygon") {
        nok::FlagSpec flag;
        flag.cls = nok::parse_divisor(opt.flag_expr, model);
        flag.point = opt.point;
        nok::NOPolygon poly = nok::no_polygon(model, D, flag);
        emit_polygon_artifacts(poly, opt);
        if (opt.json) {
            out["nu"] = nok::to_string(poly.nu);
            out["mu"] = poly.mu.str();
            out["vertices"] = vertex_json(poly);
            out["area"] = nok::polygon_area(poly).str();
            std::cout << out.dump(2) << '\n';
        } else {
            std::cout << "vertices: " << vertex_list(poly) << '\n';
            std::cout << "nu = " << nok::to_string(poly.nu) << ", mu = " << poly.mu.str()
                      << ", area = " << nok::polygon_area(poly).str() << '\n';
        }
        return 0;
    }
    if (cmd == "infinitesimal") {
        nok::InfinitesimalPoint z = parse_infinitesimal_point(opt);
        nok::NOPolygon poly = nok::infinitesimal_polygon(model, D, opt.point, z);
        emit_polygon_artifacts(poly, opt);
        if (opt.json) {
            out["mu"] = poly.mu.str();
            out["vertices"] = vertex_json(poly);
            out["largest_inverted_simplex"] = nok::largest_inverted_simplex(poly).str();
            std::cout << out.dump(2) << '\n';
        } else {
            std::cout << "vertices: " << vertex_list(poly) << '\n';
            std::cout << "mu = " << poly.mu.str()
                      << ", largest inverted simplex = " << nok::largest_inverted_simplex(poly).str() << '\n';
        }
        return 0;
    }
    if (cmd == "seshadri") {
        QuadraticNumber eps = nok::seshadri(model, D, opt.point);
        if (opt.json)
            std::cout << ojson{{"seshadri", eps.str()}}.dump(2) << '\n';
        else
            std::cout << eps.str() << conditional_stamp(model) << '\n';
        return 0;
    }
    if (cmd == "np") {
        nok::NpVerdict v = nok::np_check(model, D, opt.p);
        std::string verdict = v.holds ? "HOLDS" : (v.precondition_ok ? "FAILS" : "INCONCLUSIVE");
        if (opt.json) {
            out["p"] = v.p;
            out["verdict"] = verdict;
            out["precondition_ok"] = v.precondition_ok;
            if (v.witness) out["witness"] = nok::print_divisor(model, *v.witness);
            std::cout << out.dump(2) << '\n';
        } else {
            std::cout << verdict;
            if (v.witness) std::cout << " (witness " << nok::print_divisor(model, *v.witness) << ")";
            std::cout << conditional_stamp(model) << '\n';
        }
        return 0;
    }
    if (cmd == "reider") {
        nok::ReiderMode mode;
        if (opt.mode == "basepoint")
            mode = nok::ReiderMode::Basepoint;
        else if (opt.mode == "separation")
            mode = nok::ReiderMode::Separation;
        else
            throw nok::ParseError("--mode must be basepoint or separation", 0);
        auto candidates = nok::reider_check(model, D, mode);
        if (opt.json) {
            ojson arr = ojson::array();
            for (const auto& c : candidates) arr.push_back(nok::print_divisor(model, c));
            out["mode"] = opt.mode;
            out["candidates"] = std::move(arr);
            out["conclusion"] = candidates.empty()
                                    ? (opt.mode == "basepoint" ? "base-point free (model-conditional)"
                                                               : "very ample (model-conditional)")
                                    : "obstruction candidates present (effectivity not certified)";
            std::cout << out.dump(2) << '\n';
        } else {
            if (candidates.empty()) {
                std::cout << (opt.mode == "basepoint" ? "base-point free" : "very ample") << " (model-conditional)\n";
            } else {
                std::cout << "obstruction candidates (effectivity not certified):\n";
                for (const auto& c : candidates) std::cout << "  " << nok::print_divisor(model, c) << '\n';
            }
        }
        return 0;
    }
    throw nok::ParseError("unknown subcommand: " + cmd, 0);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Zariski decompositions, Newton-Okounkov polygons and positivity checks on surface models"};
    app.require_subcommand(1);

    Options opt;
    const std::vector<std::string> commands = {"validate", "zariski",       "volume",   "cohomology", "baselocus",
                                               "chambers", "delpezzo",      "polygon",  "infinitesimal",
                                               "seshadri", "np",            "reider",   "bounds"};
    for (const auto& name : commands) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--model", opt.model_path);
        sub->add_option("--divisor", opt.divisor);
        sub->add_option("--flag", opt.flag_expr);
        sub->add_option("--point", opt.point);
        sub->add_option("--p", opt.p);
        sub->add_option("--r", opt.r);
        sub->add_option("--g", opt.g);
        sub->add_option("--deg", opt.deg);
        sub->add_option("--pell", opt.pell);
        sub->add_option("--csv", opt.csv_path);
        sub->add_option("--svg", opt.svg_path);
        sub->add_option("--out", opt.out_path);
        sub->add_option("--mode", opt.mode);
        sub->add_option("--ord", opt.ord);
        sub->add_flag("--count-only", opt.count_only);
        sub->add_flag("--json", opt.json);
        sub->add_flag("--augmented", opt.augmented);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage errors are exit 2
    }

    try {
        return run(app.get_subcommands().front()->get_name(), opt);
    } catch (const nok::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const nok::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
}
