#include "superroot/cli.hpp"

#include "superroot/basegraph.hpp"
#include "superroot/error.hpp"
#include "superroot/oracle.hpp"
#include "superroot/rootstring.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <functional>

namespace superroot {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Result {
    Json report;
    int code = kExitPass;
};

struct Options {
    std::string type;
    std::string cartan;
    std::string set;
    std::string alpha;
    std::string beta;
    std::string format = "json";
    std::int64_t height = 0; // copied from the per-command field below before dispatch
    std::int64_t h_real = 4;
    std::int64_t h_closure = 12;
    std::int64_t h_admits = 12;
    std::int64_t h_dynkin = 12;
    std::int64_t h_sweep = 6;
    std::int64_t explore = 0;
    std::int64_t window = 0;
    std::int64_t degree = 0;
    std::int64_t K = 0;
    int max_rounds = 256;
};

Json header(const std::string& command, const Options& o, Json bounds = Json::object())
{
    Json j{{"tool", "superroot"}, {"version", kToolVersion}, {"command", command}};
    if (!o.type.empty())
        j["type"] = RootSystemHandle::build(o.type).type().str();
    j["bounds"] = std::move(bounds);
    return j;
}

RootSystemHandle need_type(const Options& o)
{
    if (o.type.empty())
        throw UsageError("--type is required");
    return RootSystemHandle::build(o.type);
}

RootSet need_set(const Options& o, const RootSystemHandle& h)
{
    if (o.set.empty())
        throw UsageError("a root set is required (--set / --sigma)");
    return root_set_from_json(load_json_argument(o.set), h);
}

CartanData need_cartan(const Options& o)
{
    if (!o.type.empty())
        return RootSystemHandle::build(o.type).cartan();
    if (!o.cartan.empty())
        return cartan_from_json(load_json_argument(o.cartan));
    throw UsageError("--type or --cartan is required");
}

Json assertion(const std::string& name, bool pass, const std::string& detail = "")
{
    Json a{{"name", name}, {"pass", pass}};
    if (!detail.empty())
        a["detail"] = detail;
    return a;
}

Json certificate(const std::string& name, const RootSystemHandle& h, const std::vector<Json>& assertions)
{
    bool pass = true;
    for (const auto& a : assertions)
        pass = pass && a.at("pass").get<bool>();
    return Json{{"name", name}, {"tool", "superroot"}, {"version", kToolVersion}, {"type", h.type().str()},
                {"assertions", assertions}, {"pass", pass}};
}

std::string label(const RootSystemHandle& h, const RootVector& v) { return h.to_epsdelta(v).str(); }

// ---------------------------------------------------------------- commands

Result cmd_validate(const Options& o)
{
    const CartanData c = need_cartan(o);
    const ValidationReport rep = validate(c);
    Result r{header("validate", o)};
    auto& j = r.report;
    j["cartan"] = cartan_to_json(c);
    j["admissible"] = rep.admissible;
    Json viol = Json::array();
    for (const auto& v : rep.admissibility_violations)
        viol.push_back({{"condition", v.condition}, {"i", v.i}, {"j", v.j}});
    j["admissibility_violations"] = viol;
    j["regular"] = rep.regular;
    Json irr = Json::array();
    for (auto [a, b] : rep.irregular_pairs)
        irr.push_back({a, b});
    j["irregular_pairs"] = irr;
    j["symmetrizable"] = rep.symmetrizable;
    if (auto d = symmetrizer(c)) {
        Json dj = Json::array();
        for (const auto& x : *d)
            dj.push_back(rational_to_json(x));
        j["symmetrizer"] = dj;
    }
    j["indecomposable"] = rep.indecomposable;
    Json r1 = Json::array();
    for (std::size_t i = 0; i < c.size(); ++i)
        r1.push_back(to_string(rank_one_type(c, i)));
    j["rank_one_types"] = r1;
    j["pass"] = rep.admissible && rep.regular;
    r.code = (rep.admissible && rep.regular) ? kExitPass : kExitFail;
    return r;
}

Result cmd_real_roots(const Options& o, bool explore_given)
{
    const CartanData c = need_cartan(o);
    if (o.height < 0)
        throw UsageError("--height must be >= 0");
    const std::int64_t explore = explore_given ? o.explore : std::max<std::int64_t>(2 * o.height, 4);
    if (explore < o.height)
        throw UsageError("--explore must be >= --height");
    const auto e = enumerate_real_roots(c, o.height, explore);
    Result r{header("real-roots", o, {{"height", o.height}, {"explore", explore}})};
    std::optional<RootSystemHandle> h;
    if (!o.type.empty())
        h = RootSystemHandle::build(o.type);
    Json roots = Json::array();
    for (const auto& [v, info] : e.roots) {
        Json x{{"alpha", root_to_json(v)}, {"parity", info.parity}, {"isotropic", info.isotropic}};
        if (h)
            x["label"] = label(*h, v);
        roots.push_back(x);
    }
    r.report["roots"] = roots;
    if (!e.complete_up_to)
        r.report["complete_up_to"] = nullptr;
    else if (*e.complete_up_to == kUnbounded)
        r.report["complete_up_to"] = "unbounded";
    else
        r.report["complete_up_to"] = *e.complete_up_to;
    r.report["bases_visited"] = e.bases_visited;
    return r;
}

Result cmd_principal_roots(const Options& o, bool explore_given)
{
    const CartanData c = need_cartan(o);
    const std::int64_t explore = explore_given ? o.explore : 64;
    Result r{header("principal-roots", o, {{"explore", explore}})};
    Json roots = Json::array();
    for (const auto& v : principal_roots(c, explore))
        roots.push_back(root_to_json(v));
    r.report["roots"] = roots;
    return r;
}

Result cmd_pi_check(const Options& o)
{
    const auto h = need_type(o);
    const RootSet s = need_set(o, h);
    const PiCheck pc = is_pi_system(s);
    Result r{header("pi-check", o)};
    r.report["set"] = root_set_to_json(s);
    r.report["ok"] = pc.ok;
    Json viol = Json::array();
    for (const auto& v : pc.violations) {
        Json x{{"condition", v.condition}, {"alpha", root_to_json(v.alpha)}};
        if (v.condition == 1) {
            x["beta"] = root_to_json(v.beta);
            x["difference"] = label(h, v.alpha - v.beta);
        }
        viol.push_back(x);
    }
    r.report["violations"] = viol;
    r.report["pass"] = pc.ok;
    r.code = pc.ok ? kExitPass : kExitFail;
    return r;
}

Result cmd_closure(const Options& o)
{
    const auto h = need_type(o);
    const RootSet s = need_set(o, h);
    const Closure c = closure_S_infinity(s, o.height, o.max_rounds);
    Result r{header("closure", o, {{"height", o.height}, {"max_rounds", o.max_rounds}})};
    r.report["closure"] = root_set_to_json(c.set);
    r.report["status"] = to_string(c.status);
    r.report["rounds"] = c.rounds;
    if (c.status == ClosureStatus::Truncated)
        r.code = kExitInconclusive;
    return r;
}

Result cmd_classify_subset(const Options& o, bool window_given)
{
    const auto h = need_type(o);
    const RootSet s = need_set(o, h);
    std::optional<std::int64_t> w;
    if (window_given)
        w = o.window;
    const SubsetClass sc = classify_subset(s, w);
    Result r{header("classify-subset", o, window_given ? Json{{"window", o.window}} : Json::object())};
    r.report["set"] = root_set_to_json(s);
    r.report["symmetric"] = sc.symmetric;
    r.report["closed"] = sc.closed;
    r.report["subroot_system"] = sc.subroot_system;
    if (!sc.witness.empty())
        r.report["witness"] = sc.witness;
    return r;
}

Result cmd_pi_of_psi(const Options& o, bool window_given)
{
    const auto h = need_type(o);
    const RootSet s = need_set(o, h);
    std::optional<std::int64_t> w;
    if (window_given)
        w = o.window;
    Result r{header("pi-of-psi", o, window_given ? Json{{"window", o.window}} : Json::object())};
    try {
        const RootSet pi = pi_of_psi(s, w);
        r.report["pi"] = root_set_to_json(pi);
        r.report["pi_is_pi_system"] = is_pi_system(pi).ok;
        r.report["pass"] = true;
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NotClosed)
            throw;
        r.report["pass"] = false;
        r.report["witness"] = e.what();
        r.code = kExitFail;
    }
    return r;
}

Result cmd_admits_pi(const Options& o)
{
    const auto h = need_type(o);
    const RootSet s = need_set(o, h);
    const auto pi = admits_pi_system(s, o.height, o.max_rounds);
    Result r{header("admits-pi", o, {{"height", o.height}, {"max_rounds", o.max_rounds}})};
    r.report["set"] = root_set_to_json(s);
    r.report["admits"] = pi.has_value();
    if (pi)
        r.report["pi"] = root_set_to_json(*pi);
    return r;
}

Result cmd_verify_dynkin(const Options& o, bool window_given)
{
    const auto h = need_type(o);
    const RootSet s = need_set(o, h);
    std::optional<std::int64_t> w;
    if (window_given)
        w = o.window;
    const DynkinCertificate c = verify_dynkin_maps(s, o.height, w);
    Json bounds{{"height", o.height}};
    if (c.window)
        bounds["window"] = *c.window;
    Result r{header("verify-dynkin", o, bounds)};
    r.report["sigma"] = root_set_to_json(s);
    r.report["closure"] = root_set_to_json(c.closure);
    r.report["status"] = to_string(c.status);
    r.report["assertions"] = Json::array({assertion("closure is a closed subroot system", c.closed_subroot, c.closed_witness),
                                          assertion("Pi of the closure gives sigma back", c.pi_recovered,
                                                    c.pi_recovered ? "" : "got " + c.pi.str())});
    r.report["pi"] = root_set_to_json(c.pi);
    r.report["pass"] = c.ok();
    r.code = c.ok() ? kExitPass : kExitFail;
    return r;
}

Result cmd_string(const Options& o, bool window_given)
{
    const auto h = need_type(o);
    if (o.alpha.empty() || o.beta.empty())
        throw UsageError("--alpha and --beta are required");
    const RootVector alpha = root_from_json(load_json_argument(o.alpha), h);
    const RootVector beta = root_from_json(load_json_argument(o.beta), h);
    const std::int64_t minw = window_given ? o.window : 6;
    const RootString s = root_string(h, beta, alpha, minw);
    Result r{header("string", o, {{"min_window", minw}, {"scanned", {s.k_lo, s.k_hi}}})};
    r.report["alpha"] = label(h, alpha);
    r.report["beta"] = label(h, beta);
    r.report["alpha_isotropic"] = s.alpha_isotropic;
    Json entries = Json::array();
    for (const auto& e : s.entries)
        entries.push_back({{"k", e.k}, {"root", root_to_json(e.root)}, {"label", label(h, e.root)},
                           {"tag", e.real ? "real" : "imaginary"}});
    r.report["entries"] = entries;
    if (s.zero_slot)
        r.report["zero_slot"] = *s.zero_slot;
    if (!s.alpha_isotropic) {
        const auto u = check_unbroken(h, s);
        r.report["unbroken"] = {{"p", u.p}, {"q", u.q}, {"pairing", rational_to_json(u.pairing)}};
        if (s.real_count() > 0) {
            const auto p = string_pattern(s);
            r.report["pattern"] = {{"p_real", p.p_real}, {"q_imag", p.q_imag}, {"r_real", p.r_real}};
        }
    }
    bool pass = true;
    Json laws = Json::array();
    if (h.is_real(beta))
        for (const auto& l : pairing_laws(h, alpha, beta)) {
            laws.push_back(assertion(l.law, l.pass, l.detail));
            pass = pass && l.pass;
        }
    r.report["laws"] = laws;
    r.report["pass"] = pass;
    r.code = pass ? kExitPass : kExitFail;
    return r;
}

Result cmd_string_sweep(const Options& o, bool degree_given)
{
    const auto h = need_type(o);
    if (o.height < 0)
        throw UsageError("--height must be >= 0");
    std::optional<std::int64_t> k;
    if (degree_given)
        k = o.degree;
    const SweepReport rep = string_sweep(h, o.height, k);
    Json bounds{{"height", o.height}};
    if (k)
        bounds["degree"] = *k;
    Result r{header("string-sweep", o, bounds)};
    r.report["strings"] = rep.strings;
    Json laws = Json::object();
    for (const auto& [name, t] : rep.laws) {
        Json x{{"checked", t.checked}, {"failed", t.failed}};
        if (!t.first_witness.empty())
            x["first_witness"] = t.first_witness;
        laws[name] = x;
    }
    r.report["laws"] = laws;
    r.report["failures"] = rep.failures();
    r.report["pass"] = rep.failures() == 0;
    r.code = rep.failures() == 0 ? kExitPass : kExitFail;
    return r;
}

Json theorem_json(const TheoremVerdict& v)
{
    Json j{{"equal", v.equal},
           {"closure_side", root_set_to_json(v.closure_side)},
           {"oracle_side", root_set_to_json(v.oracle_side)},
           {"closure_status", to_string(v.closure_status)},
           {"height_bound", v.height_bound},
           {"full_generation_checked", v.full_closure_checked}};
    if (v.window)
        j["degree_window"] = *v.window;
    if (!v.detail.empty())
        j["detail"] = v.detail;
    return j;
}

Result cmd_main_theorem(const Options& o, bool k_given)
{
    const auto h = need_type(o);
    const RootSet s = need_set(o, h);
    const Realization real = Realization::build(h);
    std::optional<std::int64_t> K;
    if (k_given)
        K = o.K;
    const TheoremVerdict v = verify_theorem_main(s, real, K);
    Json bounds{{"height", v.height_bound}};
    if (v.window)
        bounds["K"] = *v.window;
    Result r{header("verify main-theorem", o, bounds)};
    r.report["sigma"] = root_set_to_json(s);
    r.report["verdict"] = theorem_json(v);
    r.report["pass"] = v.equal;
    r.code = v.equal ? kExitPass : kExitFail;
    return r;
}

Result cmd_bracket_criteria(const Options& o, bool k_given)
{
    const auto h = need_type(o);
    const RootSet s = need_set(o, h);
    const Realization real = Realization::build(h);
    std::optional<std::int64_t> K;
    if (k_given)
        K = o.K;
    bool positive = true;
    for (const auto& a : s)
        positive = positive && a.is_positive();
    Subalgebra g;
    if (positive && is_pi_system(s).ok) {
        g = root_generated_subalgebra(real, s, K);
    } else {
        if (real.is_loop() && !K) {
            std::int64_t d = 0;
            for (const auto& a : s)
                d = std::max(d, std::abs(h.degree(a)));
            K = d + 3;
        }
        g = generated_subalgebra(root_generators(real, s), real.is_loop() ? K : std::nullopt);
        if (g.truncated)
            throw Error(ErrorCode::Inconclusive, "generated subalgebra leaves the degree window; raise --K");
    }
    const BracketReport rep = bracket_criteria_sweep(g, real);
    Json bounds = Json::object();
    if (g.degree_bound)
        bounds["K"] = *g.degree_bound;
    Result r{header("verify bracket-criteria", o, bounds)};
    r.report["set"] = root_set_to_json(s);
    r.report["subalgebra_dimension"] = g.dimension();
    r.report["subalgebra_real_roots"] = root_set_to_json(subalgebra_real_roots(g, h));
    r.report["pairs_checked"] = rep.pairs_checked;
    Json ce = Json::array();
    for (const auto& c : rep.counterexamples)
        ce.push_back({{"rule", c.rule}, {"alpha", label(h, c.alpha)}, {"beta", label(h, c.beta)}, {"detail", c.detail}});
    r.report["counterexamples"] = ce;
    r.report["pass"] = rep.counterexamples.empty();
    r.code = rep.counterexamples.empty() ? kExitPass : kExitFail;
    return r;
}

Result cmd_replay(const Options& o)
{
    Result r{header("replay-examples", o)};
    Json certs = Json::array({replay_two_isotropic_subroot_system(), replay_isotropic_affine_pair(),
                              replay_pi_system_closure_smaller()});
    bool pass = true;
    for (const auto& c : certs)
        pass = pass && c.at("pass").get<bool>();
    r.report["certificates"] = certs;
    r.report["pass"] = pass;
    r.code = pass ? kExitPass : kExitFail;
    return r;
}

int exit_for(ErrorCode c)
{
    switch (c) {
    case ErrorCode::Inconclusive:
    case ErrorCode::ProblemTooLarge:
    case ErrorCode::TruncationHit:
    case ErrorCode::WindowExhausted:
        return kExitInconclusive;
    case ErrorCode::BrokenString:
    case ErrorCode::PatternViolation:
    case ErrorCode::NonRegularBaseEncountered:
        return kExitFail;
    default:
        return kExitUsage;
    }
}

void emit(std::ostream& out, const Json& j, const std::string& format)
{
    if (format == "text") {
        for (const auto& [k, v] : j.items())
            out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    } else {
        out << j.dump(2) << "\n";
    }
}

} // namespace

// ---------------------------------------------------------------- worked examples

Json replay_two_isotropic_subroot_system()
{
    // two isotropic roots of sl(1|2) whose sum is even: the six roots form a subroot system
    const auto h = RootSystemHandle::build("A(0,1)");
    auto ed = h.zero_ed();
    auto a_ed = ed, b_ed = ed;
    a_ed.eps = {1};
    a_ed.del = {-1, 0};
    b_ed.eps = {-1};
    b_ed.del = {0, 1};
    const RootVector a = h.to_alpha(a_ed), b = h.to_alpha(b_ed), s = a + b;
    std::vector<Json> as;
    as.push_back(assertion("alpha, beta isotropic real", classify(a, h).isotropic && classify(b, h).isotropic));
    as.push_back(assertion("alpha + beta real and non-isotropic", h.is_real(s) && h.form(s, s) != 0));
    as.push_back(assertion("alpha(h_{a+b}) = beta(h_{a+b}) = 1",
                           h.coroot_pairing(a, s) == 1 && h.coroot_pairing(b, s) == 1));
    as.push_back(assertion("s_{a+b} swaps alpha and -beta", reflect(h, s, a) == -b && reflect(h, s, b) == -a));
    const RootSet psi(h, std::vector<RootVector>{a, -a, b, -b, s, -s});
    const SubsetClass sc = classify_subset(psi);
    as.push_back(assertion("{+-a, +-b, +-(a+b)} is a subroot system", sc.symmetric && sc.subroot_system, sc.witness));
    const Realization r = Realization::build(h);
    as.push_back(assertion("[x_a, x_b] != 0 and [x_-(a+b), x_b] != 0",
                           !bracket(r.root_vector(a), r.root_vector(b)).is_zero() &&
                               !bracket(r.root_vector(-s), r.root_vector(b)).is_zero()));
    Json c = certificate("two-isotropic-subroot-system", h, as);
    c["psi"] = root_set_to_json(psi);
    return c;
}

Json replay_isotropic_affine_pair()
{
    // Psi = {+-a, +-(a + null)} for isotropic a: closed, Pi(Psi) = {a, a + null}, no pi-system
    const auto h = RootSystemHandle::build("B(1,1)^(1)");
    auto a_ed = h.zero_ed();
    a_ed.eps = {-1};
    a_ed.del = {1};
    auto b_ed = a_ed;
    b_ed.null = 1;
    const RootVector a = h.to_alpha(a_ed), b = h.to_alpha(b_ed);
    const RootSet psi(h, std::vector<RootVector>{a, -a, b, -b});
    std::vector<Json> as;
    as.push_back(assertion("alpha isotropic", classify(a, h).isotropic));
    const SubsetClass sc = classify_subset(psi);
    as.push_back(assertion("Psi is a closed subroot system", sc.closed && sc.subroot_system, sc.witness));
    const RootSet pi = pi_of_psi(psi);
    as.push_back(assertion("Pi(Psi) = {a, a + null}", pi == RootSet(h, std::vector<RootVector>{a, b}), pi.str()));
    as.push_back(assertion("Pi(Psi) is not a pi-system", !is_pi_system(pi).ok));
    const std::int64_t H = 24;
    const auto adm = admits_pi_system(psi, H);
    as.push_back(assertion("Psi admits no pi-system", !adm.has_value()));

    const Realization r = Realization::build(h);
    const Subalgebra g = generated_subalgebra(root_generators(r, psi), 3);
    const RootSet re = subalgebra_real_roots(g, h);
    as.push_back(assertion("real roots of g(Psi) = Psi", !g.truncated && re == psi, re.str()));
    as.push_back(assertion("dim g(Psi) = 7 modulo the centre", g.dimension() == 7, std::to_string(g.dimension())));
    const RootSet sigma(h, std::vector<RootVector>{-a, b});
    const Subalgebra g2 = generated_subalgebra(root_generators(r, sigma), 3);
    as.push_back(assertion("{-a, a + null} is a pi-system generating g(Psi)", is_pi_system(sigma).ok && g2 == g));
    as.push_back(assertion("bracket criteria hold on g(Psi)", bracket_criteria_sweep(g, r).counterexamples.empty()));
    Json c = certificate("isotropic-affine-pair", h, as);
    c["psi"] = root_set_to_json(psi);
    c["pi"] = root_set_to_json(pi);
    c["bounds"] = {{"height", H}, {"K", 3}};
    return c;
}

Json replay_pi_system_closure_smaller()
{
    // B(2,2)^(1), i=1, k=2, j=1, l=2: Pi(Psi) is a pi-system whose closure is smaller than Psi
    const auto h = RootSystemHandle::build("B(2,2)^(1)");
    auto make = [&](int ei, int dj, int sign, int null) {
        auto v = h.zero_ed();
        v.eps[ei] = sign;
        v.del[dj] = -sign;
        v.null = null;
        return h.to_alpha(v);
    };
    const RootVector r1 = make(0, 0, 1, 6), r2 = make(0, 0, 1, 1), r3 = make(1, 1, 1, 2), r4 = make(1, 1, -1, 3);
    const RootSet psi(h, std::vector<RootVector>{r1, -r1, r2, -r2, r3, -r3, r4, -r4});
    std::vector<Json> as;
    const SubsetClass sc = classify_subset(psi);
    as.push_back(assertion("Psi (8 roots) is a closed subroot system", psi.size() == 8 && sc.closed && sc.subroot_system,
                           sc.witness));
    const RootSet pi = pi_of_psi(psi);
    const RootSet expect_pi(h, std::vector<RootVector>{r2, r3, r4});
    as.push_back(assertion("Pi(Psi) = the three stated roots", pi == expect_pi, pi.str()));
    as.push_back(assertion("Pi(Psi) is a pi-system", is_pi_system(pi).ok));
    const std::int64_t H = 64;
    const Closure cl = closure_S_infinity(pi, H);
    const RootSet expect_cl(h, std::vector<RootVector>{r2, -r2, r3, -r3, r4, -r4});
    as.push_back(assertion("closure stabilizes", cl.status == ClosureStatus::Stabilized));
    as.push_back(assertion("closure = the stated 6 roots, not Psi", cl.set == expect_cl && !(cl.set == psi), cl.set.str()));
    const Realization r = Realization::build(h);
    const TheoremVerdict v = verify_theorem_main(pi, r);
    as.push_back(assertion("real roots of g(Pi(Psi)) = closure (degree window)", v.equal, v.detail));
    Json c = certificate("pi-system-closure-smaller", h, as);
    c["psi"] = root_set_to_json(psi);
    c["pi"] = root_set_to_json(pi);
    c["closure"] = root_set_to_json(cl.set);
    c["bounds"] = {{"height", H}, {"K", *v.window}};
    return c;
}

// ---------------------------------------------------------------- driver

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Root systems, pi-systems and root strings of Kac-Moody superalgebras", "superroot"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", kToolVersion);
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));

    auto add_type = [&](CLI::App* c) { return c->add_option("--type,-t", o.type, "Catalog type, e.g. \"B(1,1)^(1)\""); };
    auto add_set = [&](CLI::App* c) {
        return c->add_option("--set,--sigma,--psi", o.set, "Root set: JSON file or inline JSON");
    };

    auto* validate_c = app.add_subcommand("validate", "Admissibility, regularity, symmetrizability");
    add_type(validate_c);
    validate_c->add_option("--cartan", o.cartan, "Cartan data JSON {\"matrix\":..., \"parity\":...}");

    auto* real_c = app.add_subcommand("real-roots", "Real roots by the base graph");
    add_type(real_c);
    real_c->add_option("--cartan", o.cartan, "Cartan data JSON");
    real_c->add_option("--height", o.h_real, "Report bound")->capture_default_str();
    auto* real_explore = real_c->add_option("--explore", o.explore, "Exploration bound (>= height)");

    auto* prin_c = app.add_subcommand("principal-roots", "Principal roots by odd reflections");
    add_type(prin_c);
    prin_c->add_option("--cartan", o.cartan, "Cartan data JSON");
    auto* prin_explore = prin_c->add_option("--explore", o.explore, "Exploration bound");

    auto* pic_c = app.add_subcommand("pi-check", "Is the set a pi-system");
    add_type(pic_c);
    add_set(pic_c);

    auto* clo_c = app.add_subcommand("closure", "S_infinity closure");
    add_type(clo_c);
    add_set(clo_c);
    clo_c->add_option("--height", o.h_closure, "Discard roots above this height")->capture_default_str();
    clo_c->add_option("--max-rounds", o.max_rounds, "Round cap")->capture_default_str();

    auto* cls_c = app.add_subcommand("classify-subset", "Symmetric / closed / subroot system");
    add_type(cls_c);
    add_set(cls_c);
    auto* cls_window = cls_c->add_option("--window", o.window, "Height window");

    auto* pop_c = app.add_subcommand("pi-of-psi", "Minimal positive elements of a closed subroot system");
    add_type(pop_c);
    add_set(pop_c);
    auto* pop_window = pop_c->add_option("--window", o.window, "Height window");

    auto* adm_c = app.add_subcommand("admits-pi", "Does the closed subroot system admit a pi-system");
    add_type(adm_c);
    add_set(adm_c);
    adm_c->add_option("--height", o.h_admits, "Closure height bound")->capture_default_str();
    adm_c->add_option("--max-rounds", o.max_rounds, "Round cap")->capture_default_str();

    auto* dyn_c = app.add_subcommand("verify-dynkin", "Round trip pi-system -> closure -> Pi");
    add_type(dyn_c);
    add_set(dyn_c);
    dyn_c->add_option("--height", o.h_dynkin, "Closure height bound")->capture_default_str();
    auto* dyn_window = dyn_c->add_option("--window", o.window, "Height window when the closure truncates");

    auto* str_c = app.add_subcommand("string", "alpha-string through beta");
    add_type(str_c);
    str_c->add_option("--alpha", o.alpha, "Direction (JSON root)");
    str_c->add_option("--beta", o.beta, "Base point (JSON root)");
    auto* str_window = str_c->add_option("--window", o.window, "Minimum scan window");

    auto* sw_c = app.add_subcommand("string-sweep", "All string laws up to a bound");
    add_type(sw_c);
    sw_c->add_option("--height", o.h_sweep, "Height bound")->capture_default_str();
    auto* sw_degree = sw_c->add_option("--degree", o.degree, "Null-degree bound (affine types)");

    auto* ver_c = app.add_subcommand("verify", "Oracle checks");
    ver_c->require_subcommand(1);
    ver_c->fallthrough();
    auto* mt_c = ver_c->add_subcommand("main-theorem", "closure = real roots of g(sigma)");
    add_type(mt_c);
    add_set(mt_c);
    auto* mt_k = mt_c->add_option("--K", o.K, "Loop degree window");
    auto* bc_c = ver_c->add_subcommand("bracket-criteria", "Bracket and reflection criteria on g(S)");
    add_type(bc_c);
    add_set(bc_c);
    auto* bc_k = bc_c->add_option("--K", o.K, "Loop degree window");

    auto* rep_c = app.add_subcommand("replay-examples", "Worked-example certificates");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        Result r;
        if (*real_c)
            o.height = o.h_real;
        else if (*clo_c)
            o.height = o.h_closure;
        else if (*adm_c)
            o.height = o.h_admits;
        else if (*dyn_c)
            o.height = o.h_dynkin;
        else if (*sw_c)
            o.height = o.h_sweep;
        if (*validate_c)
            r = cmd_validate(o);
        else if (*real_c)
            r = cmd_real_roots(o, real_explore->count() > 0);
        else if (*prin_c)
            r = cmd_principal_roots(o, prin_explore->count() > 0);
        else if (*pic_c)
            r = cmd_pi_check(o);
        else if (*clo_c)
            r = cmd_closure(o);
        else if (*cls_c)
            r = cmd_classify_subset(o, cls_window->count() > 0);
        else if (*pop_c)
            r = cmd_pi_of_psi(o, pop_window->count() > 0);
        else if (*adm_c)
            r = cmd_admits_pi(o);
        else if (*dyn_c)
            r = cmd_verify_dynkin(o, dyn_window->count() > 0);
        else if (*str_c)
            r = cmd_string(o, str_window->count() > 0);
        else if (*sw_c)
            r = cmd_string_sweep(o, sw_degree->count() > 0);
        else if (*mt_c)
            r = cmd_main_theorem(o, mt_k->count() > 0);
        else if (*bc_c)
            r = cmd_bracket_criteria(o, bc_k->count() > 0);
        else if (*rep_c)
            r = cmd_replay(o);
        emit(out, r.report, o.format);
        return r.code;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        const int code = exit_for(e.code());
        Json j{{"tool", "superroot"}, {"version", kToolVersion}, {"error", std::string(to_string(e.code()))},
               {"message", e.what()}, {"pass", false}};
        if (code == kExitInconclusive)
            j["inconclusive"] = true;
        emit(out, j, o.format);
        err << e.what() << "\n";
        return code;
    }
}

} // namespace superroot
