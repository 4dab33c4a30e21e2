#include "dexsym/catalog.hpp"

#include <algorithm>

namespace dexsym::catalog {

bool ParamDomain::admits(const mpq_class& v) const {
    switch (kind) {
        case Kind::AnyRational:
            return true;
        case Kind::Excluding:
            return std::find(values.begin(), values.end(), v) == values.end();
        case Kind::Finite:
            return std::find(values.begin(), values.end(), v) != values.end();
        case Kind::IntegerAtLeast:
            return v.get_den() == 1 && v >= min_value;
    }
    return false;
}

std::string ParamDomain::str() const {
    auto join = [&] {
        std::string s;
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i) s += ", ";
            s += values[i].get_str();
        }
        return s;
    };
    switch (kind) {
        case Kind::AnyRational: return "Q";
        case Kind::Excluding: return "Q \\ {" + join() + "}";
        case Kind::Finite: return "{" + join() + "}";
        case Kind::IntegerAtLeast: return "integer >= " + std::to_string(min_value);
    }
    return "?";
}

namespace {

using SP = SymbolicProduct;

auto basis_of(std::vector<std::string> names) {
    return [names = std::move(names)](const ParamMap&) { return names; };
}

auto products_of(std::vector<SP> ps) {
    return [ps = std::move(ps)](const ParamMap&) { return ps; };
}

SP prod(const char* l, const char* r, mpq_class c, const char* t) {
    return SP{l, r, {{std::move(c), t}}};
}

ParamDomain any_rational() {
    return ParamDomain{ParamDomain::Kind::AnyRational, {}, 0};
}

ParamDomain excluding(std::vector<mpq_class> vals) {
    return ParamDomain{ParamDomain::Kind::Excluding, std::move(vals), 0};
}

ParamDomain finite(std::vector<mpq_class> vals) {
    return ParamDomain{ParamDomain::Kind::Finite, std::move(vals), 0};
}

ParamDomain integer_at_least(long n) {
    return ParamDomain{ParamDomain::Kind::IntegerAtLeast, {}, n};
}

ExpectedProperties right_nilpotent_yes(std::string claim) {
    ExpectedProperties e;
    e.dextral = true;
    e.solvable = true;
    e.left_nilpotent = true;
    e.left_index = 3;
    e.right_nilpotent = true;
    e.claim = std::move(claim);
    return e;
}

ExpectedProperties solvable_yes(std::string nilradical, std::string claim) {
    ExpectedProperties e;
    e.dextral = true;
    e.solvable = true;
    e.left_nilpotent = true;
    e.left_index = 3;
    e.right_nilpotent = false;
    e.nilradical = std::move(nilradical);
    e.claim = std::move(claim);
    return e;
}

ExpectedProperties solvable_no(std::string nilradical, std::string claim) {
    ExpectedProperties e;
    e.dextral = false;
    e.solvable = true;
    e.left_nilpotent = false;
    e.right_nilpotent = false;
    e.nilradical = std::move(nilradical);
    e.claim = std::move(claim);
    return e;
}

CatalogEntry dim4_nilpotent(std::string id, std::vector<SP> ps) {
    CatalogEntry e;
    e.id = std::move(id);
    e.basis = basis_of({"x", "y", "z", "w"});
    e.products = products_of(std::move(ps));
    e.expected = right_nilpotent_yes("right nilpotent with vanishing third left power");
    return e;
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> cat;

    {
        CatalogEntry e;
        e.id = "lnotr";
        e.basis = basis_of({"x", "y", "z"});
        e.products = products_of({prod("z", "x", 1, "z")});
        e.expected.dextral = true;
        e.expected.solvable = true;
        e.expected.left_nilpotent = true;
        e.expected.left_index = 3;
        e.expected.right_nilpotent = false;
        e.expected.claim =
            "left nilpotent but not right nilpotent; dextral symmetric without being "
            "anti-associative";
        cat.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.id = "Lprime";
        e.basis = basis_of({"x", "y", "z"});
        e.products = products_of(
            {prod("x", "z", 1, "x"), prod("y", "z", 1, "y"), prod("z", "y", -1, "y")});
        e.expected.dextral = false;
        e.expected.solvable = true;
        e.expected.left_nilpotent = false;
        e.expected.right_nilpotent = false;
        e.expected.claim = "solvable (third derived term vanishes) but not left nilpotent";
        cat.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.id = "gamma1";
        e.basis = basis_of({"x", "y"});
        e.products = products_of({prod("x", "x", 1, "y")});
        e.expected = right_nilpotent_yes(
            "the unique non-abelian 2-dimensional right nilpotent algebra; every triple "
            "product vanishes");
        cat.push_back(std::move(e));
    }

    const char* mu_claim = "3-dimensional right nilpotent; third left power vanishes";
    {
        CatalogEntry e;
        e.id = "mu1";
        e.basis = basis_of({"x", "y", "z"});
        e.products = products_of({prod("x", "x", 1, "z")});
        e.expected = right_nilpotent_yes(mu_claim);
        cat.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.id = "mu2";
        e.basis = basis_of({"x", "y", "z"});
        e.products = products_of({prod("x", "y", 1, "z"), prod("y", "x", -1, "z")});
        e.expected = right_nilpotent_yes(mu_claim);
        cat.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.id = "mu3";
        e.basis = basis_of({"x", "y", "z"});
        e.params = {{"alpha", any_rational(), 1}};
        e.notes = "alpha is unconstrained; any rational value is accepted";
        e.products = [](const ParamMap& pm) {
            return std::vector<SP>{prod("x", "x", 1, "z"), prod("y", "y", pm.at("alpha"), "z"),
                                   prod("x", "y", 1, "z")};
        };
        e.expected = right_nilpotent_yes(mu_claim);
        cat.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.id = "mu4";
        e.basis = basis_of({"x", "y", "z"});
        e.products = products_of({prod("y", "x", 1, "z"), prod("x", "y", 1, "z")});
        e.expected = right_nilpotent_yes(mu_claim);
        cat.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.id = "mu5";
        e.basis = basis_of({"x", "y", "z"});
        e.products = products_of({prod("x", "x", 1, "y"), prod("y", "x", 1, "z")});
        e.expected = right_nilpotent_yes(mu_claim);
        cat.push_back(std::move(e));
    }

    cat.push_back(dim4_nilpotent(
        "N1", {prod("x", "x", 1, "y"), prod("y", "x", 1, "z"), prod("z", "x", 1, "w")}));
    cat.push_back(dim4_nilpotent("N2", {prod("x", "x", 1, "z"), prod("x", "y", 1, "w"),
                                        prod("y", "x", 1, "z"), prod("z", "x", 1, "w")}));
    cat.push_back(dim4_nilpotent(
        "N3", {prod("x", "x", 1, "z"), prod("y", "x", 1, "z"), prod("z", "x", 1, "w")}));
    {
        CatalogEntry e;
        e.id = "N4";
        e.basis = basis_of({"x", "y", "z", "w"});
        e.params = {{"alpha", finite({0, 1}), 0}};
        e.products = [](const ParamMap& pm) {
            return std::vector<SP>{prod("x", "x", 1, "z"), prod("x", "y", pm.at("alpha"), "w"),
                                   prod("y", "x", 1, "z"), prod("y", "y", 1, "w"),
                                   prod("z", "x", 1, "w")};
        };
        e.expected = right_nilpotent_yes("right nilpotent with vanishing third left power");
        cat.push_back(std::move(e));
    }
    cat.push_back(dim4_nilpotent(
        "N5", {prod("x", "x", 1, "z"), prod("x", "y", 1, "w"), prod("z", "x", 1, "w")}));
    cat.push_back(dim4_nilpotent(
        "N6", {prod("x", "x", 1, "z"), prod("y", "y", 1, "w"), prod("z", "x", 1, "w")}));

    auto dim4_refuted = [](std::string id, std::vector<SP> ps) {
        CatalogEntry e;
        e.id = std::move(id);
        e.basis = basis_of({"x", "y", "z", "w"});
        e.products = products_of(std::move(ps));
        e.expected.dextral = false;
        e.expected.solvable = true;
        e.expected.left_nilpotent = true;
        e.expected.left_index = 4;
        e.expected.right_nilpotent = true;
        e.expected.witness_pattern = std::array<std::size_t, 3>{1, 0, 0};  // (y, x, x)
        e.expected.claim = "[y,[x,x]] = 0 but [x,[y,x]] != 0";
        return e;
    };
    cat.push_back(dim4_refuted(
        "N7", {prod("x", "x", 1, "w"), prod("y", "x", 1, "z"), prod("z", "x", 1, "w"),
               prod("x", "y", -1, "z"), prod("x", "z", -1, "w")}));
    cat.push_back(dim4_refuted(
        "N8", {prod("x", "x", 1, "w"), prod("y", "x", 1, "z"), prod("z", "x", 1, "w"),
               SP{"x", "y", {{-1, "z"}, {1, "w"}}}, prod("x", "z", -1, "w")}));
    cat.push_back(dim4_refuted(
        "N9", {prod("x", "x", 1, "w"), prod("y", "x", 1, "z"), prod("y", "y", 1, "w"),
               prod("z", "x", 1, "w"), SP{"x", "y", {{-1, "z"}, {2, "w"}}},
               prod("x", "z", -1, "w")}));
    cat.push_back(dim4_refuted(
        "N10", {prod("x", "x", 1, "w"), prod("y", "x", 1, "z"), prod("y", "y", 1, "w"),
                prod("z", "x", 1, "w"), prod("x", "y", -1, "z"), prod("x", "z", -1, "w")}));

    cat.push_back(dim4_nilpotent(
        "N11", {prod("x", "x", 1, "w"), prod("x", "y", 1, "z"), prod("y", "x", -1, "z"),
                SP{"y", "y", {{-2, "z"}, {1, "w"}}}}));
    cat.push_back(dim4_nilpotent(
        "N12", {prod("x", "y", 1, "z"), prod("y", "x", 1, "w"), prod("y", "y", -1, "z")}));
    {
        CatalogEntry e;
        e.id = "N13";
        e.basis = basis_of({"x", "y", "z", "w"});
        e.params = {{"alpha", any_rational(), 1}};
        e.products = [](const ParamMap& pm) {
            return std::vector<SP>{prod("x", "x", 1, "z"), prod("x", "y", 1, "w"),
                                   prod("y", "x", -pm.at("alpha"), "z"),
                                   prod("y", "y", -1, "w")};
        };
        e.expected = right_nilpotent_yes("right nilpotent with vanishing third left power");
        cat.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.id = "N14";
        e.basis = basis_of({"x", "y", "z", "w"});
        e.params = {{"alpha", any_rational(), 1}};
        e.products = [](const ParamMap& pm) {
            return std::vector<SP>{prod("x", "x", 1, "w"), prod("x", "y", pm.at("alpha"), "w"),
                                   prod("y", "x", -pm.at("alpha"), "w"), prod("y", "y", 1, "w"),
                                   prod("z", "z", 1, "w")};
        };
        e.expected = right_nilpotent_yes("right nilpotent with vanishing third left power");
        cat.push_back(std::move(e));
    }
    cat.push_back(dim4_nilpotent(
        "N15", {prod("x", "y", 1, "w"), prod("x", "z", 1, "w"), prod("y", "x", -1, "w"),
                prod("y", "y", 1, "w"), prod("z", "x", 1, "w")}));
    cat.push_back(dim4_nilpotent(
        "N16", {prod("x", "x", 1, "w"), prod("x", "y", 1, "w"), prod("y", "x", -1, "w"),
                prod("z", "z", 1, "w")}));
    cat.push_back(dim4_nilpotent("N17", {prod("x", "y", 1, "z"), prod("y", "x", 1, "w")}));
    {
        CatalogEntry e = dim4_nilpotent(
            "N18",
            {prod("x", "y", 1, "z"), prod("y", "x", -1, "z"), prod("y", "y", 1, "w")});
        e.notes =
            "recorded with [y,x] = -z, matching the antisymmetric pairing of [x,y] = z; "
            "either sign keeps the table right Leibniz with vanishing third left power";
        cat.push_back(std::move(e));
    }
    cat.push_back(dim4_nilpotent("N19", {prod("y", "x", 1, "w"), prod("y", "y", 1, "z")}));
    {
        CatalogEntry e;
        e.id = "N20";
        e.basis = basis_of({"x", "y", "z", "w"});
        e.params = {{"alpha", excluding({1}), 0}};
        e.products = [](const ParamMap& pm) {
            const mpq_class& a = pm.at("alpha");
            mpq_class c = (1 + a) / (1 - a);
            return std::vector<SP>{prod("x", "y", 1, "w"), prod("y", "x", c, "w"),
                                   prod("y", "y", 1, "z")};
        };
        e.expected = right_nilpotent_yes("right nilpotent with vanishing third left power");
        cat.push_back(std::move(e));
    }
    cat.push_back(dim4_nilpotent(
        "N21", {prod("x", "y", 1, "w"), prod("y", "x", -1, "w"), prod("z", "z", 1, "w")}));
    cat.push_back(dim4_nilpotent("N22", {prod("z", "x", 1, "w"), prod("y", "z", 1, "w")}));

    {
        CatalogEntry e;
        e.id = "R1";
        e.basis = basis_of({"x", "y", "z", "w"});
        e.products = products_of({prod("x", "z", 1, "x"), prod("y", "w", 1, "y")});
        e.expected = solvable_yes(
            "abelian 2-dimensional",
            "the only dextral symmetric 4-dimensional solvable algebra with 2-dimensional "
            "nilradical; every triple product vanishes");
        cat.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.id = "S2";
        e.basis = basis_of({"x", "y", "z", "w"});
        e.products = products_of({prod("x", "z", 1, "x"), prod("y", "w", 1, "y"),
                                  prod("z", "x", -1, "x"), prod("w", "y", -1, "y")});
        e.expected = solvable_no("abelian 2-dimensional",
                                 "[z,[x,z]] = -x != 0; the left series never reaches zero");
        e.expected.witness_pattern = std::array<std::size_t, 3>{0, 2, 2};  // (x, z, z)
        cat.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.id = "S3";
        e.basis = basis_of({"x", "y", "z", "w"});
        e.products = products_of(
            {prod("x", "z", 1, "x"), prod("y", "w", 1, "y"), prod("w", "y", -1, "y")});
        e.expected = solvable_no("abelian 2-dimensional",
                                 "[w,[y,w]] != 0; the left series never reaches zero");
        cat.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.id = "L1";
        e.basis = basis_of({"x", "y", "z", "w"});
        e.params = {{"lambda", any_rational(), 1}};
        e.notes =
            "recorded with [x,w] = -(1+lambda)w: the right Leibniz identity evaluated at "
            "(x,y,z) forces this sign, and the opposite sign fails the identity for every "
            "lambda != -1";
        e.products = [](const ParamMap& pm) {
            const mpq_class& l = pm.at("lambda");
            return std::vector<SP>{prod("y", "z", 1, "w"),      prod("z", "y", -1, "w"),
                                   prod("y", "x", 1, "y"),      prod("z", "x", l, "z"),
                                   prod("w", "x", 1 + l, "w"),  prod("x", "y", -1, "y"),
                                   prod("x", "z", -l, "z"),     prod("x", "w", -(1 + l), "w")};
        };
        e.expected =
            solvable_no("mu2", "no dextral symmetric 4-dimensional algebra has nilradical mu2");
        cat.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.id = "L2";
        e.basis = basis_of({"x", "y", "z", "w"});
        e.products = products_of({prod("y", "z", 1, "w"), prod("z", "y", -1, "w"),
                                  prod("y", "x", 1, "y"), prod("x", "y", -1, "y"),
                                  prod("z", "x", -1, "z"), prod("x", "z", 1, "z"),
                                  prod("x", "x", 1, "w")});
        e.expected =
            solvable_no("mu2", "no dextral symmetric 4-dimensional algebra has nilradical mu2");
        cat.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.id = "L3";
        e.basis = basis_of({"x", "y", "z", "w"});
        e.products = products_of({prod("y", "z", 1, "w"), prod("z", "y", -1, "w"),
                                  SP{"y", "x", {{1, "y"}, {1, "z"}}},
                                  SP{"x", "y", {{-1, "y"}, {-1, "z"}}}, prod("z", "x", 1, "z"),
                                  prod("x", "z", -1, "z"), prod("w", "x", 2, "w"),
                                  prod("x", "w", -2, "w")});
        e.expected =
            solvable_no("mu2", "no dextral symmetric 4-dimensional algebra has nilradical mu2");
        cat.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.id = "R2";
        e.basis = basis_of({"x", "y", "z", "w"});
        e.products = products_of(
            {prod("z", "y", 1, "w"), prod("z", "x", 1, "z"), prod("w", "x", 1, "w")});
        e.expected = solvable_yes(
            "mu3", "the dextral symmetric algebra with nilradical mu3; left nilpotent of index 3");
        cat.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.id = "R3";
        e.basis = basis_of({"x", "y", "z", "w"});
        e.params = {{"beta", any_rational(), 1}};
        e.products = [](const ParamMap& pm) {
            return std::vector<SP>{prod("y", "y", 1, "w"), prod("z", "x", 1, "z"),
                                   prod("x", "y", 1, "w"),
                                   prod("x", "x", pm.at("beta"), "w")};
        };
        e.expected = solvable_yes(
            "mu1", "dextral symmetric with nilradical mu1; left nilpotent of index 3");
        cat.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.id = "R4";
        e.basis = basis_of({"x", "y", "z", "w"});
        e.products = products_of({prod("y", "y", 1, "w"), prod("z", "x", 1, "z")});
        e.expected = solvable_yes(
            "mu1", "dextral symmetric with nilradical mu1; left nilpotent of index 3");
        cat.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.id = "R5";
        e.basis = basis_of({"x", "y", "z", "w"});
        e.products = products_of({prod("y", "y", 1, "w"), prod("z", "x", 1, "z"),
                                  prod("x", "y", 1, "w"), prod("y", "x", 1, "w")});
        e.expected = solvable_yes(
            "mu1", "dextral symmetric with nilradical mu1; left nilpotent of index 3");
        cat.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.id = "towers_n";
        e.params = {{"n", integer_at_least(2), 4}};
        e.basis = [](const ParamMap& pm) {
            const long n = pm.at("n").get_num().get_si();
            std::vector<std::string> names;
            for (long i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
            return names;
        };
        e.products = [](const ParamMap& pm) {
            const long n = pm.at("n").get_num().get_si();
            std::vector<SP> ps;
            for (long i = 1; i < n; ++i) {
                ps.push_back(SP{"x" + std::to_string(i), "x" + std::to_string(n),
                                {{1, "x" + std::to_string(i)}}});
            }
            return ps;
        };
        e.expected.dextral = true;
        e.expected.solvable = true;
        e.expected.left_nilpotent = true;
        e.expected.left_index = 3;
        e.expected.right_nilpotent = false;
        e.expected.claim =
            "an n-dimensional dextral symmetric algebra with vanishing third left power, "
            "for every n >= 2";
        cat.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.id = "lie7_char3";
        e.default_field = FieldSpec::prime(3);
        e.required_char = 3;
        e.notes = "the six listed brackets are completed antisymmetrically; the Jacobi "
                  "identity needs characteristic 3";
        e.basis = basis_of({"x1", "x2", "x3", "x4", "x5", "x6", "x7"});
        e.products = products_of({
            prod("x1", "x2", 1, "x4"), prod("x2", "x1", -1, "x4"),
            prod("x1", "x3", 1, "x5"), prod("x3", "x1", -1, "x5"),
            prod("x2", "x3", 1, "x6"), prod("x3", "x2", -1, "x6"),
            prod("x1", "x6", 1, "x7"), prod("x6", "x1", -1, "x7"),
            prod("x2", "x5", -1, "x7"), prod("x5", "x2", 1, "x7"),
            prod("x3", "x4", 1, "x7"), prod("x4", "x3", -1, "x7"),
        });
        e.expected.dextral = true;
        e.expected.solvable = true;
        e.expected.left_nilpotent = true;
        e.expected.left_index = 4;
        e.expected.right_nilpotent = true;
        e.expected.claim =
            "a dextral symmetric Lie algebra over GF(3) whose third left power is nonzero";
        cat.push_back(std::move(e));
    }

    return cat;
}

const std::vector<CatalogEntry>& entries() {
    static const std::vector<CatalogEntry> cat = build_catalog();
    return cat;
}

}  // namespace

const std::vector<std::string>& list() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& e : entries()) v.push_back(e.id);
        return v;
    }();
    return ids;
}

const CatalogEntry& get(const std::string& id) {
    for (const auto& e : entries()) {
        if (e.id == id) return e;
    }
    throw error("catalog: unknown id \"" + id + "\"");
}

const ExpectedProperties& expected(const std::string& id) {
    return get(id).expected;
}

AlgebraTable instantiate(const std::string& id, const ParamMap& params,
                         std::optional<FieldSpec> field) {
    const CatalogEntry& e = get(id);
    for (const auto& [k, v] : params) {
        bool known = false;
        for (const auto& spec : e.params) known = known || spec.name == k;
        if (!known) throw error("catalog: entry " + id + " has no parameter \"" + k + "\"");
    }
    ParamMap full;
    for (const auto& spec : e.params) {
        auto it = params.find(spec.name);
        mpq_class v = (it != params.end()) ? it->second : spec.default_value;
        if (!spec.domain.admits(v)) {
            throw error("catalog: parameter " + spec.name + "=" + v.get_str() +
                        " outside domain " + spec.domain.str() + " for entry " + id);
        }
        full[spec.name] = std::move(v);
    }
    FieldSpec f = field.value_or(e.default_field);
    if (e.required_char && f.characteristic() != *e.required_char) {
        throw error("catalog: entry " + id + " requires characteristic " +
                    std::to_string(*e.required_char) + ", got " + f.str());
    }

    std::string name = id;
    if (!full.empty()) {
        name += "[";
        bool first = true;
        for (const auto& [k, v] : full) {
            if (!first) name += ",";
            first = false;
            name += k + "=" + v.get_str();
        }
        name += "]";
    }

    std::vector<AlgebraTable::SparseProduct> sparse;
    for (const SP& p : e.products(full)) {
        AlgebraTable::SparseProduct sp;
        sp.left = p.left;
        sp.right = p.right;
        for (const auto& [c, t] : p.value) sp.value.emplace_back(Scalar::of_rat(c, f), t);
        sparse.push_back(std::move(sp));
    }
    return AlgebraTable::from_sparse(std::move(name), f, e.basis(full), sparse);
}

AlgebraTable default_instance(const std::string& id) {
    return instantiate(id);
}

std::vector<ParamMap> sample_params(const std::string& id,
                                    const std::vector<mpq_class>& base_samples) {
    const CatalogEntry& e = get(id);
    std::vector<ParamMap> maps{{}};
    for (const auto& spec : e.params) {
        std::vector<mpq_class> vals;
        switch (spec.domain.kind) {
            case ParamDomain::Kind::Finite:
                vals = spec.domain.values;
                break;
            case ParamDomain::Kind::IntegerAtLeast:
                for (long k = 0; k < 4; ++k) vals.push_back(spec.domain.min_value + k);
                break;
            default:
                for (const auto& v : base_samples) {
                    if (spec.domain.admits(v)) vals.push_back(v);
                }
        }
        std::vector<ParamMap> next;
        for (const auto& m : maps) {
            for (const auto& v : vals) {
                ParamMap m2 = m;
                m2[spec.name] = v;
                next.push_back(std::move(m2));
            }
        }
        maps = std::move(next);
    }
    return maps;
}

}  // namespace dexsym::catalog
