#include "pirel/catalog/schema.hpp"

#include "pirel/errors.hpp"

namespace pirel {

namespace {

constexpr std::string_view kFormat = "pirel-catalog";
constexpr int kVersion = 1;

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw LoadError(std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

Rational rationalFromJson(const Json& j) {
    if (!j.is_string()) throw LoadError("expected a rational string, got " + j.dump());
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const DomainError& e) {
        throw LoadError(e.what());
    }
}

int intFromJson(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw LoadError(std::string(what) + " must be an integer");
    return j.get<int>();
}

}  // namespace

Json quadToJson(const QuadExt& v) {
    if (v.isRational()) return v.a().toString();
    Json j;
    j["a"] = v.a().toString();
    j["b"] = v.b().toString();
    j["d"] = v.d().toString();
    return j;
}

QuadExt quadFromJson(const Json& j) {
    if (j.is_string()) return QuadExt(rationalFromJson(j));
    const Rational d = rationalFromJson(field(j, "d"));
    if (!d.isInteger() || d.sign() <= 0) throw LoadError("radicand must be a positive integer");
    return QuadExt(rationalFromJson(field(j, "a")), rationalFromJson(field(j, "b")), d.num());
}

Json complexToJson(const ExactComplex& v) {
    if (v.isReal()) return quadToJson(v.re);
    Json j;
    j["re"] = quadToJson(v.re);
    j["im"] = quadToJson(v.im);
    return j;
}

ExactComplex complexFromJson(const Json& j) {
    if (j.is_object() && j.contains("re")) {
        return {quadFromJson(field(j, "re")), quadFromJson(field(j, "im"))};
    }
    return ExactComplex(quadFromJson(j));
}

Json polyToJson(const PolyQ& p) {
    Json j = Json::array();
    for (const auto& c : p.coefficients()) j.push_back(quadToJson(c));
    return j;
}

PolyQ polyFromJson(const Json& j) {
    if (!j.is_array()) throw LoadError("polynomial must be an array of coefficients");
    std::vector<QuadExt> c;
    for (const auto& e : j) c.push_back(quadFromJson(e));
    PolyQ p(c);
    if (p.coefficients().size() != c.size()) {
        throw LoadError("polynomial has trailing zero coefficients");
    }
    return p;
}

Json closedFormToJson(const ClosedForm& cf) {
    Json j;
    j["coeff"] = quadToJson(cf.coeff);
    j["pi"] = cf.piPower;
    if (!cf.radicals.empty()) {
        Json r = Json::array();
        for (const auto& rad : cf.radicals) {
            Json e;
            e["base"] = quadToJson(rad.base);
            e["index"] = rad.index;
            e["power"] = rad.power;
            r.push_back(e);
        }
        j["radicals"] = r;
    }
    if (cf.kSqrt2Power != 0) j["kSqrt2"] = cf.kSqrt2Power;
    if (cf.k3Power != 0) j["k3"] = cf.k3Power;
    if (cf.sinPi) j["sinPi"] = cf.sinPi->toString();
    return j;
}

ClosedForm closedFormFromJson(const Json& j) {
    ClosedForm cf;
    cf.coeff = quadFromJson(field(j, "coeff"));
    cf.piPower = intFromJson(field(j, "pi"), "pi");
    if (j.contains("radicals")) {
        for (const auto& e : field(j, "radicals")) {
            cf.radicals.push_back({quadFromJson(field(e, "base")),
                                   intFromJson(field(e, "index"), "index"),
                                   intFromJson(field(e, "power"), "power")});
        }
    }
    if (j.contains("kSqrt2")) cf.kSqrt2Power = intFromJson(j.at("kSqrt2"), "kSqrt2");
    if (j.contains("k3")) cf.k3Power = intFromJson(j.at("k3"), "k3");
    if (j.contains("sinPi")) cf.sinPi = rationalFromJson(j.at("sinPi"));
    return cf;
}

Json specToJson(const SeriesSpec& spec) {
    Json j;
    j["id"] = spec.id;
    j["title"] = spec.title;
    Json fam;
    fam["tag"] = std::string(tagName(spec.family.tag));
    if (spec.family.s) fam["s"] = spec.family.s->toString();
    if (!spec.family.divisor.isZero()) fam["divisor"] = polyToJson(spec.family.divisor);
    j["family"] = fam;
    if (spec.legendreStride != 0) {
        Json leg;
        leg["stride"] = spec.legendreStride;
        leg["x"] = complexToJson(spec.legendreArg);
        j["legendre"] = leg;
    }
    j["z0"] = complexToJson(spec.z0);
    j["poly"] = polyToJson(spec.poly);
    if (!spec.polyPrev.isZero()) j["polyPrev"] = polyToJson(spec.polyPrev);
    j["rhs"] = closedFormToJson(spec.rhs);
    return j;
}

SeriesSpec specFromJson(const Json& j) {
    SeriesSpec spec;
    const Json& id = field(j, "id");
    if (!id.is_string()) throw LoadError("id must be a string");
    spec.id = id.get<std::string>();
    try {
        const Json& title = field(j, "title");
        if (!title.is_string()) throw LoadError("title must be a string");
        spec.title = title.get<std::string>();
        const Json& fam = field(j, "family");
        const Json& tag = field(fam, "tag");
        if (!tag.is_string()) throw LoadError("family tag must be a string");
        spec.family.tag = parseTag(tag.get<std::string>());
        if (fam.contains("s")) spec.family.s = rationalFromJson(fam.at("s"));
        if (fam.contains("divisor")) spec.family.divisor = polyFromJson(fam.at("divisor"));
        if (j.contains("legendre")) {
            const Json& leg = j.at("legendre");
            spec.legendreStride = intFromJson(field(leg, "stride"), "stride");
            spec.legendreArg = complexFromJson(field(leg, "x"));
        }
        spec.z0 = complexFromJson(field(j, "z0"));
        spec.poly = polyFromJson(field(j, "poly"));
        if (j.contains("polyPrev")) spec.polyPrev = polyFromJson(j.at("polyPrev"));
        spec.rhs = closedFormFromJson(field(j, "rhs"));
        spec.validate();
    } catch (const LoadError& e) {
        throw LoadError(spec.id + ": " + e.what());
    } catch (const std::logic_error& e) {
        throw LoadError(spec.id + ": " + e.what());
    }
    return spec;
}

std::string serializeCatalog(const std::vector<SeriesSpec>& specs) {
    Json doc;
    doc["format"] = std::string(kFormat);
    doc["version"] = kVersion;
    Json entries = Json::array();
    for (const auto& s : specs) entries.push_back(specToJson(s));
    doc["entries"] = entries;
    return doc.dump(2) + "\n";
}

std::vector<SeriesSpec> parseCatalog(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw LoadError(std::string("catalog is not valid JSON: ") + e.what());
    }
    const Json& format = field(doc, "format");
    if (!format.is_string() || format.get<std::string>() != kFormat) {
        throw LoadError("not a pirel catalog document");
    }
    if (intFromJson(field(doc, "version"), "version") != kVersion) {
        throw LoadError("unsupported catalog version");
    }
    const Json& entries = field(doc, "entries");
    if (!entries.is_array()) throw LoadError("entries must be an array");
    std::vector<SeriesSpec> specs;
    for (const auto& e : entries) {
        specs.push_back(specFromJson(e));
        for (std::size_t i = 0; i + 1 < specs.size(); ++i) {
            if (specs[i].id == specs.back().id) throw LoadError("duplicate id " + specs.back().id);
        }
    }
    return specs;
}

}  // namespace pirel
