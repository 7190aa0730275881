// cmiso: decide and certify cyclic self-isogenies of CM elliptic curves,
// classify Fricke fixed points, enumerate curve lists. All arithmetic exact.

#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cmiso/enumerate.hpp"
#include "cmiso/fricke.hpp"
#include "cmiso/isogeny.hpp"
#include "cmiso/qforms.hpp"

using json = nlohmann::ordered_json;
using namespace cmiso;

namespace {

// Exit codes: 0 ok, 1 negative verdict on a check-style command, 2 bad input.
constexpr int kExitOk = 0;
constexpr int kExitNo = 1;
constexpr int kExitBadInput = 2;

json tau_json(const TauPoly& t) {
    return json{{"u1", t.u1().str()},
                {"u2", t.u2().str()},
                {"v1", t.v1().str()},
                {"v2", t.v2().str()},
                {"text", t.text()}};
}

json pair_json(const WitnessPair& p) {
    return json{{"a", p.a.str()}, {"bprime", p.bprime.str()}};
}

json gen_json(const SubgroupGen& g) {
    return json{{"u11", g.u11.str()},
                {"u21", g.u21.str()},
                {"n", g.n.str()},
                {"text", g.text()}};
}

void emit(const json& j, bool as_json, const std::string& human) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << human;
}

std::string pairs_human(const std::vector<WitnessPair>& pairs) {
    if (pairs.empty()) return "  (none)\n";
    std::string s;
    for (const auto& p : pairs)
        s += "  (" + p.a.str() + ", " + p.bprime.str() + ")\n";
    return s;
}

SubgroupGen parse_gen(const std::string& text) {
    auto c1 = text.find(',');
    auto c2 = (c1 == std::string::npos) ? std::string::npos
                                        : text.find(',', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw std::domain_error("generator: expected \"u11,u21,n\"");
    Integer u11 = parse_integer(text.substr(0, c1));
    Integer u21 = parse_integer(text.substr(c1 + 1, c2 - c1 - 1));
    Integer n = parse_integer(text.substr(c2 + 1));
    if (n < 1) throw std::domain_error("generator: order must be positive");
    return {std::move(u11), std::move(u21), std::move(n)};
}

int cmd_check(const std::string& tau_s, const std::string& n_s, bool as_json) {
    TauPoly tau = TauPoly::parse(tau_s);
    Integer n = parse_integer(n_s);
    auto pairs = find_pairs(tau, n);
    bool yes = !pairs.empty();
    json j{{"command", "check"},
           {"tau", tau_json(tau)},
           {"n", n.str()},
           {"has_self_isogeny", yes}};
    json jp = json::array();
    for (const auto& p : pairs) jp.push_back(pair_json(p));
    j["pairs"] = jp;
    emit(j, as_json,
         "tau: " + tau.text() + "\nn: " + n.str() +
             "\nself-isogeny: " + (yes ? "yes" : "no") + "\npairs (a, b'):\n" +
             pairs_human(pairs));
    return yes ? kExitOk : kExitNo;
}

int cmd_generator(const std::string& tau_s, const std::string& a_s,
                  const std::string& b_s, bool as_json) {
    TauPoly tau = TauPoly::parse(tau_s);
    Integer a = parse_integer(a_s);
    Integer bp = parse_integer(b_s);
    IsogenyMatrix im = build_matrix(tau, a, bp);
    SubgroupGen gen = subgroup_generator(tau, a, bp);
    json j{{"command", "generator"}, {"tau", tau_json(tau)},
           {"a", a.str()},           {"bprime", bp.str()},
           {"degree", im.n.str()},   {"generator", gen_json(gen)}};
    emit(j, as_json,
         "tau: " + tau.text() + "\npair: (" + a.str() + ", " + bp.str() +
             ")\ndegree: " + im.n.str() + "\ngenerator: (" + gen.u11.str() +
             " + " + gen.u21.str() + "*tau)/" + gen.n.str() +
             "\ncanonical: " + gen.text() + "\n");
    return kExitOk;
}

int cmd_fricke(const std::string& tau_s, const std::string& a_s,
               const std::string& b_s, bool as_json) {
    TauPoly tau = TauPoly::parse(tau_s);
    Integer a = parse_integer(a_s);
    Integer bp = parse_integer(b_s);
    IsogenyMatrix im = build_matrix(tau, a, bp);
    bool fixed = fricke_matrix_test(im.M);
    json j{{"command", "fricke"},
           {"tau", tau_json(tau)},
           {"a", a.str()},
           {"bprime", bp.str()},
           {"matrix", im.M.str()},
           {"degree", im.n.str()},
           {"trace", im.M.trace().str()},
           {"fixed_point", fixed}};
    emit(j, as_json,
         "tau: " + tau.text() + "\npair: (" + a.str() + ", " + bp.str() +
             ")\nmatrix: " + im.M.str() + "\ndegree: " + im.n.str() +
             "\ntrace: " + im.M.trace().str() +
             "\nfricke-fixed-point: " + (fixed ? "yes" : "no") + "\n");
    return fixed ? kExitOk : kExitNo;
}

int cmd_classify(const std::string& tau_s, bool as_json) {
    TauPoly tau = TauPoly::parse(tau_s);
    FrickeClassification cls = classify_fricke_n(tau);
    json j{{"command", "classify"},
           {"tau", tau_json(tau)},
           {"n", cls.n.str()},
           {"case", fricke_case_name(cls.case_tag)}};
    json jw = json::array();
    for (const auto& w : cls.witnesses) jw.push_back(pair_json(w));
    j["witnesses"] = jw;
    emit(j, as_json,
         "tau: " + tau.text() + "\nn: " + cls.n.str() + "\ncase: " +
             fricke_case_name(cls.case_tag) + "\nwitnesses (a, b'):\n" +
             pairs_human(cls.witnesses));
    return kExitOk;
}

int cmd_fixed_points(const std::string& n_s, bool as_json) {
    Integer n = parse_integer(n_s);
    auto points = enumerate_fixed_points(n);
    Integer expected = nu(n);
    bool agree = Integer(points.size()) == expected;
    json j{{"command", "fixed-points"},
           {"n", n.str()},
           {"count", points.size()},
           {"nu", expected.str()},
           {"agreement", agree}};
    json jp = json::array();
    for (const auto& fp : points)
        jp.push_back(json{{"tau", tau_json(fp.tau)}, {"generator", gen_json(fp.gen)}});
    j["fixed_points"] = jp;
    std::string human = "n: " + n.str() + "\ncount: " +
                        std::to_string(points.size()) + "\nnu: " +
                        expected.str() +
                        "\nagreement: " + (agree ? "yes" : "no") +
                        "\nfixed points:\n";
    for (const auto& fp : points)
        human += "  tau " + fp.tau.text() + "  generator " + fp.gen.text() + "\n";
    emit(j, as_json, human);
    return kExitOk;
}

int cmd_enumerate(const std::string& n_s, const std::string& p_s, bool as_json) {
    if (!n_s.empty()) {
        Integer n = parse_integer(n_s);
        auto curves = curves_with_self_isogeny(n);
        json j{{"command", "enumerate"},
               {"n", n.str()},
               {"count", curves.size()}};
        json jc = json::array();
        for (const auto& t : curves) jc.push_back(tau_json(t));
        j["curves"] = jc;
        std::string human = "n: " + n.str() + "\ncount: " +
                            std::to_string(curves.size()) + "\ncurves:\n";
        for (const auto& t : curves) human += "  " + t.text() + "\n";
        emit(j, as_json, human);
        return kExitOk;
    }
    Integer p = parse_integer(p_s);
    PrimeCountResult r = prime_count_check(p);
    Integer expected = p + 1;
    json j{{"command", "enumerate"},
           {"prime", p.str()},
           {"count", r.count.str()},
           {"expected", expected.str()},
           {"ok", r.ok}};
    emit(j, as_json,
         "p: " + p.str() + "\ncount: " + r.count.str() + "\nexpected: " +
             expected.str() + "\nok: " + (r.ok ? "yes" : "no") + "\n");
    return r.ok ? kExitOk : kExitNo;
}

int cmd_class_number(const std::string& d_s, bool as_json) {
    Integer d = parse_integer(d_s);
    Integer hd = class_number(d);
    json j{{"command", "class-number"}, {"d", d.str()}, {"h", hd.str()}};
    emit(j, as_json, "D: " + d.str() + "\nh: " + hd.str() + "\n");
    return kExitOk;
}

int cmd_nu(const std::string& n_s, bool as_json) {
    Integer n = parse_integer(n_s);
    Integer v = nu(n);
    json j{{"command", "nu"}, {"n", n.str()}, {"nu", v.str()}};
    emit(j, as_json, "n: " + n.str() + "\nnu: " + v.str() + "\n");
    return kExitOk;
}

int cmd_verify(const std::string& tau_s, const std::string& gen_s, bool as_json) {
    TauPoly tau = TauPoly::parse(tau_s);
    SubgroupGen gen = parse_gen(gen_s);
    bool ok = verify_self_isogeny_oracle(tau, gen);
    json j{{"command", "verify"},
           {"tau", tau_json(tau)},
           {"generator", gen_json(gen)},
           {"accepted", ok}};
    emit(j, as_json,
         "tau: " + tau.text() + "\ngenerator: " + gen.text() +
             "\noracle: " + (ok ? "accepted" : "rejected") + "\n");
    return ok ? kExitOk : kExitNo;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyclic self-isogenies and Fricke fixed points of CM elliptic curves"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit one canonical JSON object");

    std::string tau_s, n_s, a_s, b_s, p_s, d_s, gen_s;

    auto* check = app.add_subcommand("check", "decide a cyclic degree-n self-isogeny");
    check->fallthrough();
    check->add_option("--tau", tau_s, "tau as u1/u2,v1/v2")->required();
    check->add_option("--n", n_s, "isogeny degree")->required();

    auto* generator = app.add_subcommand("generator", "extract the subgroup generator");
    generator->fallthrough();
    generator->add_option("--tau", tau_s)->required();
    generator->add_option("--a", a_s)->required();
    generator->add_option("--bprime", b_s)->required();

    auto* fricke = app.add_subcommand("fricke", "Fricke fixed-point test for a witness pair");
    fricke->fallthrough();
    fricke->add_option("--tau", tau_s)->required();
    fricke->add_option("--a", a_s)->required();
    fricke->add_option("--bprime", b_s)->required();

    auto* classify = app.add_subcommand("classify", "the unique Fricke level of a curve");
    classify->fallthrough();
    classify->add_option("--tau", tau_s)->required();

    auto* fixed = app.add_subcommand("fixed-points", "all Fricke fixed points of level n");
    fixed->fallthrough();
    fixed->add_option("--n", n_s)->required();

    auto* enumerate = app.add_subcommand("enumerate", "curves with a degree-n self-isogeny");
    enumerate->fallthrough();
    auto* opt_n = enumerate->add_option("--n", n_s, "isogeny degree");
    auto* opt_p = enumerate->add_option("--prime", p_s, "prime degree, compared with p+1");
    opt_n->excludes(opt_p);
    opt_p->excludes(opt_n);

    auto* classno = app.add_subcommand("class-number", "h(D) for D < 0");
    classno->fallthrough();
    classno->add_option("--d", d_s)->required();

    auto* nucmd = app.add_subcommand("nu", "Fricke fixed point count nu(n)");
    nucmd->fallthrough();
    nucmd->add_option("--n", n_s)->required();

    auto* verify = app.add_subcommand("verify", "lattice-oracle check of a generator");
    verify->fallthrough();
    verify->add_option("--tau", tau_s)->required();
    verify->add_option("--gen", gen_s, "generator as u11,u21,n")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }

    try {
        if (app.got_subcommand(check)) return cmd_check(tau_s, n_s, as_json);
        if (app.got_subcommand(generator))
            return cmd_generator(tau_s, a_s, b_s, as_json);
        if (app.got_subcommand(fricke)) return cmd_fricke(tau_s, a_s, b_s, as_json);
        if (app.got_subcommand(classify)) return cmd_classify(tau_s, as_json);
        if (app.got_subcommand(fixed)) return cmd_fixed_points(n_s, as_json);
        if (app.got_subcommand(enumerate)) {
            if (n_s.empty() && p_s.empty()) {
                std::cerr << "error: enumerate needs --n or --prime\n";
                return kExitBadInput;
            }
            return cmd_enumerate(n_s, p_s, as_json);
        }
        if (app.got_subcommand(classno)) return cmd_class_number(d_s, as_json);
        if (app.got_subcommand(nucmd)) return cmd_nu(n_s, as_json);
        if (app.got_subcommand(verify)) return cmd_verify(tau_s, gen_s, as_json);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
