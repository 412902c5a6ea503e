#include "szego/measure.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace szego {

namespace {

using nlohmann::json;

constexpr double kTwoPi = 6.283185307179586476925286766559;

[[noreturn]] void field_error(const std::string& path, const std::string& msg)
{
    throw PreconditionError(path + ": " + msg);
}

double get_number(const json& j, const std::string& key, const std::string& path)
{
    if (!j.contains(key)) field_error(path + "." + key, "missing");
    const auto& v = j.at(key);
    if (!v.is_number()) field_error(path + "." + key, "expected a number");
    return v.get<double>();
}

double get_number_or(const json& j, const std::string& key, double dflt, const std::string& path)
{
    if (!j.contains(key)) return dflt;
    return get_number(j, key, path);
}

Real get_real(const json& v, const std::string& path)
{
    if (v.is_number()) return Real(v.get<double>());
    if (v.is_string()) {
        try {
            return from_decimal(v.get<std::string>());
        } catch (const PreconditionError&) {
            field_error(path, "not a decimal string");
        }
    }
    field_error(path, "expected a number or decimal string");
}

// Angle in turns: a number (dyadic doubles are kept exact) or a "p/q" string.
Angle get_angle(const json& v, const std::string& path)
{
    if (v.is_number()) return Angle::from_turns(v.get<double>());
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Angle::from_turns(std::stod(s));
            long long p = std::stoll(s.substr(0, slash));
            long long q = std::stoll(s.substr(slash + 1));
            if (q <= 0) field_error(path, "nonpositive denominator");
            return Angle::rational(p, q);
        } catch (const std::logic_error&) {
            field_error(path, "malformed angle '" + s + "'");
        }
    }
    field_error(path, "expected an angle in turns");
}

Arc get_arc(const json& j, const std::string& path)
{
    double start = get_number(j, "start", path);
    double length = get_number(j, "length", path);
    if (!(length > 0 && length <= 1)) field_error(path + ".length", "must lie in (0, 1] turns");
    double len = length >= 1.0 ? kTwoPi : length * kTwoPi;
    return make_arc(start * kTwoPi, len);
}

DensityPiece get_piece(const json& j, const std::string& path)
{
    if (!j.is_object()) field_error(path, "expected an object");
    DensityPiece p;
    p.arc = get_arc(j, path);
    std::string fam = j.value("family", std::string("constant"));
    if (fam == "constant") {
        double v = get_number(j, "value", path);
        if (v < 0) field_error(path + ".value", "negative density");
        p.family = ConstantDensity{v};
    } else if (fam == "exp_linear") {
        p.family = ExpLinearDensity{get_number(j, "a", path), get_number(j, "b", path)};
    } else if (fam == "cosine") {
        CosineDensity c;
        c.base = get_number(j, "base", path);
        c.amplitude = get_number(j, "amplitude", path);
        c.frequency = static_cast<std::int64_t>(get_number(j, "frequency", path));
        if (std::fabs(c.amplitude) > c.base) field_error(path, "cosine density takes negative values");
        p.family = c;
    } else if (fam == "reciprocal_exp") {
        ReciprocalExpDensity r;
        r.offset = get_number_or(j, "offset", 0.0, path);
        r.coeff = get_number_or(j, "coeff", 1.0, path);
        r.scale = get_number_or(j, "scale", -1.0, path);
        r.center = get_number_or(j, "center", 0.0, path) * kTwoPi;
        p.family = r;
    } else {
        field_error(path + ".family", "unknown density family '" + fam + "'");
    }
    return p;
}

std::string line_col(const std::string& text, std::size_t byte)
{
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

json angle_json(const Angle& a)
{
    if (a.exact()) return std::to_string(a.num) + "/" + std::to_string(a.den);
    return a.turns;
}

json real_json(const Real& x)
{
    double d = to_double(x);
    if (d != 0 && std::isfinite(d) && Real(d) == x) return d;
    if (x == 0) return 0.0;
    return to_decimal(x, 40);
}

}  // namespace

Measure parse_measure_json(const std::string& text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw PreconditionError("measure file parse error at " + line_col(text, e.byte == 0 ? 0 : e.byte - 1) +
                                ": " + e.what());
    }
    if (!doc.is_object() || !doc.contains("components") || !doc["components"].is_array())
        throw PreconditionError("measure file: expected an object with a \"components\" array");

    Measure rho;
    const auto& comps = doc["components"];
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const std::string path = "components[" + std::to_string(i) + "]";
        const auto& c = comps[i];
        if (!c.is_object()) field_error(path, "expected an object");
        Real weight = c.contains("weight") ? get_real(c["weight"], path + ".weight") : Real(1);
        if (weight < 0) field_error(path + ".weight", "negative weight");
        std::string kind = c.value("kind", std::string());
        if (kind == "atomic") {
            AtomicComponent a;
            if (!c.contains("atoms") || !c["atoms"].is_array()) field_error(path + ".atoms", "expected an array");
            for (std::size_t k = 0; k < c["atoms"].size(); ++k) {
                const std::string ap = path + ".atoms[" + std::to_string(k) + "]";
                const auto& at = c["atoms"][k];
                if (!at.is_array() || at.size() != 2) field_error(ap, "expected [angle, mass]");
                Atom atom{get_angle(at[0], ap + "[0]"), 0.0};
                if (!at[1].is_number()) field_error(ap + "[1]", "expected a mass");
                atom.mass = at[1].get<double>();
                if (!(atom.mass >= 0)) field_error(ap + "[1]", "negative mass");
                a.atoms.push_back(atom);
            }
            rho.add(a, weight);
        } else if (kind == "density") {
            DensityComponent d;
            if (!c.contains("pieces") || !c["pieces"].is_array()) field_error(path + ".pieces", "expected an array");
            for (std::size_t k = 0; k < c["pieces"].size(); ++k)
                d.pieces.push_back(get_piece(c["pieces"][k], path + ".pieces[" + std::to_string(k) + "]"));
            rho.add(d, weight);
        } else if (kind == "riesz") {
            RieszProductComponent r;
            if (!c.contains("alphas") || !c.contains("ells")) field_error(path, "riesz needs alphas and ells");
            for (const auto& a : c["alphas"]) r.alphas.push_back(a.get<double>());
            for (const auto& l : c["ells"]) r.ells.push_back(l.get<std::int64_t>());
            if (r.alphas.size() != r.ells.size()) field_error(path, "alphas and ells differ in length");
            for (std::size_t k = 0; k < r.alphas.size(); ++k)
                if (!(r.alphas[k] > 0 && r.alphas[k] <= 1))
                    field_error(path + ".alphas[" + std::to_string(k) + "]", "outside (0, 1]");
            try {
                check_lacunary(r.ells);
            } catch (const PreconditionError& e) {
                field_error(path + ".ells", e.what());
            }
            rho.add(r, weight);
        } else {
            field_error(path + ".kind", "unknown component kind '" + kind + "'");
        }
    }
    if (doc.contains("total_mass")) {
        Real declared = get_real(doc["total_mass"], "total_mass");
        Real actual = rho.total_mass();
        if (boost::multiprecision::abs(actual - declared) > Real(1e-12) * (declared > 1 ? declared : Real(1)))
            throw PreconditionError("total_mass: declared " + to_decimal(declared, 17) + " but components sum to " +
                                    to_decimal(actual, 17));
    }
    return rho;
}

Measure load_measure_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot open measure file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_measure_json(ss.str());
}

std::string measure_to_json(const Measure& rho)
{
    json doc;
    doc["components"] = json::array();
    for (const auto& wc : rho.components) {
        json c;
        c["weight"] = real_json(wc.weight);
        if (const auto* a = std::get_if<AtomicComponent>(&wc.component)) {
            c["kind"] = "atomic";
            c["atoms"] = json::array();
            for (const auto& at : a->atoms) c["atoms"].push_back(json::array({angle_json(at.angle), at.mass}));
        } else if (const auto* d = std::get_if<DensityComponent>(&wc.component)) {
            c["kind"] = "density";
            c["pieces"] = json::array();
            for (const auto& p : d->pieces) {
                json pj;
                pj["start"] = p.arc.start / kTwoPi;
                pj["length"] = p.arc.length >= kTwoPi ? 1.0 : p.arc.length / kTwoPi;
                std::visit(
                    [&](const auto& f) {
                        using T = std::decay_t<decltype(f)>;
                        if constexpr (std::is_same_v<T, ConstantDensity>) {
                            pj["family"] = "constant";
                            pj["value"] = f.value;
                        } else if constexpr (std::is_same_v<T, ExpLinearDensity>) {
                            pj["family"] = "exp_linear";
                            pj["a"] = f.a;
                            pj["b"] = f.b;
                        } else if constexpr (std::is_same_v<T, CosineDensity>) {
                            pj["family"] = "cosine";
                            pj["base"] = f.base;
                            pj["amplitude"] = f.amplitude;
                            pj["frequency"] = f.frequency;
                        } else {
                            pj["family"] = "reciprocal_exp";
                            pj["offset"] = f.offset;
                            pj["coeff"] = f.coeff;
                            pj["scale"] = f.scale;
                            pj["center"] = f.center / kTwoPi;
                        }
                    },
                    p.family);
                c["pieces"].push_back(pj);
            }
        } else {
            const auto& r = std::get<RieszProductComponent>(wc.component);
            c["kind"] = "riesz";
            c["alphas"] = r.alphas;
            c["ells"] = r.ells;
        }
        doc["components"].push_back(c);
    }
    return doc.dump(2);
}

}  // namespace szego
