#include "hypertheta/catalog.hpp"
#include "hypertheta/digest.hpp"
#include "hypertheta/errors.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace hypertheta {

using nlohmann::json;

namespace {

json rational_json(const Rational& r) { return json::array({r.num, r.den}); }

json characteristic_json(const Characteristic& ch) {
    return json::array({rational_json(ch.a), rational_json(ch.c), rational_json(ch.b), rational_json(ch.d)});
}

json terms_json(const std::vector<IdentityTerm>& terms) {
    json out = json::array();
    for (const auto& t : terms) {
        json factors = json::array();
        for (const auto& f : t.factors) {
            factors.push_back({{"ch", characteristic_json(f.ch)},
                               {"arg", json::array({f.arg.c1, f.arg.c2})},
                               {"scale", f.scale == Scale::Base ? "base" : "doubled"}});
        }
        out.push_back({{"coefficient", json::array({t.coefficient.real(), t.coefficient.imag()})},
                       {"factors", std::move(factors)}});
    }
    return out;
}

json identity_json(const Identity& idty) {
    json j = {{"id", idty.id},
              {"family", idty.family},
              {"summary", idty.summary},
              {"domain", domain_name(idty.domain)},
              {"flags", idty.flags},
              {"lhs", terms_json(idty.lhs)},
              {"rhs", terms_json(idty.rhs)}};
    if (idty.root) {
        json rads = json::array();
        for (const auto& r : idty.root->radicands) rads.push_back(terms_json(r));
        j["root"] = {{"target", characteristic_json(idty.root->target)},
                     {"prefactor", idty.root->prefactor},
                     {"printed_signs", idty.root->printed_signs},
                     {"radicands", std::move(rads)}};
    }
    return j;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw CatalogError("catalog: " + what);
}

Rational rational_from(const json& j) {
    require(j.is_array() && j.size() == 2, "rational must be [num, den]");
    const int den = j.at(1).get<int>();
    require(den == 1 || den == 2, "denominator must be 1 or 2");
    return Rational(j.at(0).get<int>(), den);
}

Characteristic characteristic_from(const json& j) {
    require(j.is_array() && j.size() == 4, "characteristic must have four entries");
    return Characteristic{rational_from(j[0]), rational_from(j[1]), rational_from(j[2]), rational_from(j[3])};
}

std::vector<IdentityTerm> terms_from(const json& j) {
    require(j.is_array(), "terms must be an array");
    std::vector<IdentityTerm> out;
    for (const auto& t : j) {
        IdentityTerm term;
        const auto& c = t.at("coefficient");
        require(c.is_array() && c.size() == 2, "coefficient must be [re, im]");
        term.coefficient = {c[0].get<double>(), c[1].get<double>()};
        require(std::isfinite(term.coefficient.real()) && std::isfinite(term.coefficient.imag()) &&
                    term.coefficient != cplx(0.0),
                "coefficient must be finite and non-zero");
        for (const auto& f : t.at("factors")) {
            ThetaFactor factor;
            factor.ch = characteristic_from(f.at("ch"));
            const auto& a = f.at("arg");
            require(a.is_array() && a.size() == 2, "arg must be [coeff1, coeff2]");
            factor.arg = {a[0].get<int>(), a[1].get<int>()};
            for (int v : {factor.arg.c1, factor.arg.c2}) require(v >= -1 && v <= 2, "arg coefficient out of range");
            const auto scale = f.at("scale").get<std::string>();
            require(scale == "base" || scale == "doubled", "scale must be base or doubled");
            factor.scale = scale == "base" ? Scale::Base : Scale::Doubled;
            term.factors.push_back(factor);
        }
        require(!term.factors.empty(), "term without factors");
        out.push_back(std::move(term));
    }
    return out;
}

DomainNote domain_from(const std::string& s) {
    if (s == "TwoPoint") return DomainNote::TwoPoint;
    if (s == "OnePoint") return DomainNote::OnePoint;
    if (s == "ConstantsOnly") return DomainNote::ConstantsOnly;
    throw CatalogError("catalog: unknown domain " + s);
}

}  // namespace

std::string catalog_to_json(const Catalog& catalog) {
    // One identity per line keeps the shipped file readable and diffable.
    std::ostringstream os;
    os << "{\n  \"format_version\": " << catalog.format_version << ",\n  \"identities\": [\n";
    for (std::size_t i = 0; i < catalog.identities.size(); ++i) {
        os << "    " << identity_json(catalog.identities[i]).dump();
        os << (i + 1 < catalog.identities.size() ? ",\n" : "\n");
    }
    os << "  ]\n}\n";
    return os.str();
}

Catalog catalog_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
        Catalog catalog;
        catalog.format_version = j.at("format_version").get<int>();
        require(catalog.format_version == 1, "unsupported format_version");
        std::set<std::string> ids;
        for (const auto& e : j.at("identities")) {
            Identity idty;
            idty.id = e.at("id").get<std::string>();
            require(ids.insert(idty.id).second, "duplicate id " + idty.id);
            idty.family = e.at("family").get<std::string>();
            idty.summary = e.value("summary", "");
            idty.domain = domain_from(e.at("domain").get<std::string>());
            idty.flags = e.value("flags", std::vector<std::string>{});
            idty.lhs = terms_from(e.at("lhs"));
            idty.rhs = terms_from(e.at("rhs"));
            if (e.contains("root")) {
                const auto& r = e.at("root");
                RootForm root;
                root.target = characteristic_from(r.at("target"));
                root.prefactor = r.at("prefactor").get<double>();
                root.printed_signs = r.at("printed_signs").get<std::vector<int>>();
                for (const auto& rad : r.at("radicands")) root.radicands.push_back(terms_from(rad));
                require(root.printed_signs.size() == root.radicands.size(), "root signs and radicands differ");
                idty.root = std::move(root);
            }
            catalog.identities.push_back(std::move(idty));
        }
        return catalog;
    } catch (const json::exception& e) {
        throw CatalogError(std::string("catalog: malformed JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw CatalogError(std::string("catalog: ") + e.what());
    }
}

Catalog load_catalog(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CatalogError("cannot open catalog file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return catalog_from_json(ss.str());
}

std::string catalog_digest(const Catalog& catalog) { return sha256_hex(catalog_to_json(catalog)); }

}  // namespace hypertheta
