#include "nok/modelfile.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nok/errors.hpp"

namespace nok {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

}  // namespace

DivisorClass parse_divisor(const std::string& text, const SurfaceModel& model) {
    DivisorClass result(model.rank());
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i == text.size()) throw ParseError("empty divisor expression", 0);

    bool first = true;
    while (true) {
        skip_ws();
        if (i == text.size()) {
            if (first) throw ParseError("expected a term", i);
            break;
        }
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = (text[i] == '-') ? -1 : 1;
            ++i;
            skip_ws();
        } else if (!first) {
            throw ParseError("expected '+' or '-'", i);
        }

        Rational coeff(1);
        bool have_coeff = false;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            std::size_t num_end = i;
            skip_ws();
            if (i < text.size() && text[i] == '/') {
                ++i;
                skip_ws();
                if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                    throw ParseError("expected a denominator", i);
                std::size_t den_start = i;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
                coeff = Rational(Integer(text.substr(start, num_end - start)),
                                 Integer(text.substr(den_start, i - den_start)));
                if (coeff.get_den() == 0) throw ParseError("zero denominator", den_start);
                coeff.canonicalize();
            } else {
                coeff = Rational(Integer(text.substr(start, num_end - start)));
            }
            have_coeff = true;
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip_ws();
            }
        }

        if (i == text.size() || !ident_start(text[i])) {
            if (have_coeff && coeff == 0) {  // bare zero term
                first = false;
                if (i == text.size()) break;
                continue;
            }
            throw ParseError("expected an identifier", i);
        }
        std::size_t id_start = i;
        while (i < text.size() && ident_char(text[i])) ++i;
        std::string name = text.substr(id_start, i - id_start);

        DivisorClass cls;
        bool resolved = false;
        for (std::size_t b = 0; b < model.basis.size(); ++b)
            if (model.basis[b] == name) {
                cls = model.basis_class(b);
                resolved = true;
                break;
            }
        if (!resolved) {
            if (const CurveRecord* c = model.find_curve(name)) {
                cls = c->cls;
                resolved = true;
            }
        }
        if (!resolved) throw ParseError("unknown identifier: " + name, id_start);

        result += (Rational(sign) * coeff) * cls;
        first = false;
    }
    return result;
}

std::string print_divisor(const SurfaceModel& model, const DivisorClass& D) {
    if (D.size() != model.rank()) throw DimensionMismatch();
    std::string out;
    for (std::size_t i = 0; i < D.size(); ++i) {
        const Rational& c = D.coords[i];
        if (c == 0) continue;
        Rational a = abs(c);
        if (out.empty()) {
            if (sgn(c) < 0) out += '-';
        } else {
            out += (sgn(c) < 0) ? " - " : " + ";
        }
        if (a != 1) out += to_string(a);
        out += model.basis[i];
    }
    if (out.empty()) out = "0";
    return out;
}

namespace {

using json = nlohmann::ordered_json;

Rational json_rational(const json& v) {
    if (v.is_number_integer()) return Rational(Integer(v.get<long>()));
    if (v.is_string()) return rational_from_string(v.get<std::string>());
    throw ParseError("expected a rational (integer or \"p/q\" string)", 0);
}

}  // namespace

SurfaceModel model_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), 0);
    }
    try {
        if (!doc.contains("version") || doc["version"].get<int>() != 1)
            throw ParseError("unsupported model file version", 0);

        SurfaceModel model;
        model.name = doc.value("name", std::string());
        for (const auto& b : doc.at("basis")) model.basis.push_back(b.get<std::string>());
        std::size_t n = model.rank();
        const auto& gram = doc.at("gram");
        if (gram.size() != n) throw ParseError("gram size does not match the basis", 0);
        model.gram.assign(n, std::vector<Rational>(n));
        for (std::size_t i = 0; i < n; ++i) {
            if (gram[i].size() != n) throw ParseError("gram row size does not match the basis", 0);
            for (std::size_t j = 0; j < n; ++j) model.gram[i][j] = json_rational(gram[i][j]);
        }
        model.complete = doc.value("complete", false);
        model.abelian = doc.value("abelian", false);

        for (const auto& c : doc.value("curves", json::array())) {
            CurveRecord rec;
            rec.name = c.at("name").get<std::string>();
            rec.cls = parse_divisor(c.at("class").get<std::string>(), model);
            if (c.contains("genus") && !c["genus"].is_null()) rec.genus = c["genus"].get<int>();
            model.curves.push_back(std::move(rec));
        }
        model.canonical = parse_divisor(doc.at("canonical").get<std::string>(), model);
        model.ample_ref = parse_divisor(doc.at("ample_reference").get<std::string>(), model);

        for (const auto& p : doc.value("points", json::array())) {
            PointProfile profile;
            profile.name = p.at("name").get<std::string>();
            const json mult = p.value("mult", json::object());
            for (const auto& [curve, m] : mult.items()) profile.mult[curve] = m.get<int>();
            const json ord_on = p.value("ord_on", json::object());
            for (const auto& [key, ord] : ord_on.items()) {
                auto bar = key.find('|');
                if (bar == std::string::npos) throw ParseError("ord_on key must be \"curve|flag\": " + key, 0);
                profile.ord_on[{key.substr(0, bar), key.substr(bar + 1)}] = ord.get<int>();
            }
            profile.very_general = p.value("very_general", false);
            profile.abelian_origin = p.value("abelian_origin", false);
            model.points.push_back(std::move(profile));
        }

        ValidationReport report = validate_model(model);
        if (!report.ok()) {
            std::string msg = "model validation failed:";
            for (const auto& f : report.failures) msg += "\n  - " + f;
            throw DomainError(msg);
        }
        return model;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed model document: ") + e.what(), 0);
    }
}

std::string model_to_json(const SurfaceModel& model) {
    json doc;
    doc["version"] = 1;
    doc["name"] = model.name;
    doc["basis"] = model.basis;
    json gram = json::array();
    for (const auto& row : model.gram) {
        json r = json::array();
        for (const auto& v : row) r.push_back(to_string(v));
        gram.push_back(std::move(r));
    }
    doc["gram"] = std::move(gram);
    doc["canonical"] = print_divisor(model, model.canonical);
    doc["ample_reference"] = print_divisor(model, model.ample_ref);
    json curves = json::array();
    for (const auto& c : model.curves) {
        json rec;
        rec["name"] = c.name;
        rec["class"] = print_divisor(model, c.cls);
        if (c.genus) rec["genus"] = *c.genus;
        curves.push_back(std::move(rec));
    }
    doc["curves"] = std::move(curves);
    json points = json::array();
    for (const auto& p : model.points) {
        json rec;
        rec["name"] = p.name;
        json mult = json::object();
        for (const auto& [curve, m] : p.mult) mult[curve] = m;
        rec["mult"] = std::move(mult);
        json ord = json::object();
        for (const auto& [key, o] : p.ord_on) ord[key.first + "|" + key.second] = o;
        rec["ord_on"] = std::move(ord);
        rec["very_general"] = p.very_general;
        rec["abelian_origin"] = p.abelian_origin;
        points.push_back(std::move(rec));
    }
    doc["points"] = std::move(points);
    doc["complete"] = model.complete;
    doc["abelian"] = model.abelian;
    return doc.dump(2) + "\n";
}

SurfaceModel load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open model file: " + path, 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return model_from_json(buf.str());
}

void save_model(const SurfaceModel& model, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw DomainError("cannot write model file: " + path);
    out << model_to_json(model);
}

}  // namespace nok
