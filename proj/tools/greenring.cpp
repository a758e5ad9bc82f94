// greenring: exact tensor-power decomposition statistics at the command line.
//
// Subcommands: verlinde, kp, green, asym, group, lie, selftest.
// Output is JSON (default) or CSV via --format; exact values are decimal
// strings, floats carry error bounds where available.
//
// Exit codes: 0 success, 2 precondition violation, 3 internal assertion,
// 64 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <iostream>

#include "greenring/asym.hpp"
#include "greenring/chartab.hpp"
#include "greenring/green.hpp"
#include "greenring/jordan.hpp"
#include "greenring/kp.hpp"
#include "greenring/lie.hpp"
#include "greenring/output.hpp"
#include "greenring/selftest.hpp"
#include "greenring/verlinde.hpp"

using namespace greenring;
using out::OutputRecord;

namespace {

std::string g_format = "json";

void emit(const OutputRecord& rec) {
    if (g_format == "csv") std::cout << rec.to_csv();
    else std::cout << rec.to_json().dump(2) << "\n";
}

// "0,1,0,0" -> element over basis lo, lo+1, ...
RingElement parse_dense(const std::string& csv, int lo) {
    RingElement e;
    std::size_t pos = 0;
    int idx = lo;
    while (pos <= csv.size()) {
        std::size_t next = csv.find(',', pos);
        std::string tok = csv.substr(pos, next == std::string::npos ? std::string::npos
                                                                    : next - pos);
        require(!tok.empty(), "element: empty coefficient");
        e.add(idx++, Int(tok));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return e;
}

// "5:1,7:2" -> sparse element
RingElement parse_sparse(const std::string& s) {
    RingElement e;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t next = s.find(',', pos);
        std::string tok = s.substr(pos, next == std::string::npos ? std::string::npos
                                                                  : next - pos);
        std::size_t colon = tok.find(':');
        require(colon != std::string::npos, "element: expected index:coeff pairs");
        e.add(std::stoll(tok.substr(0, colon)), Int(tok.substr(colon + 1)));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return e;
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        std::size_t next = csv.find(',', pos);
        out.push_back(std::stoi(csv.substr(pos, next == std::string::npos
                                                    ? std::string::npos
                                                    : next - pos)));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return out;
}

std::vector<Int> parse_mults(const std::string& csv) {
    std::vector<Int> out;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        std::size_t next = csv.find(',', pos);
        out.emplace_back(csv.substr(pos, next == std::string::npos ? std::string::npos
                                                                   : next - pos));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return out;
}

void element_rows(OutputRecord& rec, const RingElement& e) {
    rec.columns = {"index", "coefficient"};
    for (const auto& [i, c] : e.coeffs())
        rec.rows.push_back({std::to_string(i), c.get_str()});
}

// --- group tables from JSON files ------------------------------------------------

bool looks_rational(const nlohmann::json& chars) {
    for (const auto& row : chars)
        for (const auto& v : row)
            if (!v.is_string()) return false;
    return true;
}

grp::CharacterTable load_exact_table(const nlohmann::json& j) {
    grp::CharacterTable t;
    t.name = j.value("name", "user");
    t.order = j.at("order").get<long long>();
    for (const auto& c : j.at("classes"))
        t.classes.push_back({c.at("name").get<std::string>(), c.at("size").get<long long>(),
                             c.at("inverse").get<int>()});
    for (const auto& row : j.at("chars")) {
        std::vector<Rat> r;
        for (const auto& v : row) {
            Rat q(v.get<std::string>());
            q.canonicalize();
            r.push_back(q);
        }
        t.chars.push_back(std::move(r));
    }
    t.verify();
    return t;
}

grp::ApproxCharacterTable load_approx_table(const nlohmann::json& j) {
    grp::ApproxCharacterTable t;
    t.name = j.value("name", "user");
    t.order = j.at("order").get<long long>();
    for (const auto& c : j.at("classes"))
        t.classes.push_back({c.at("name").get<std::string>(), c.at("size").get<long long>(),
                             c.at("inverse").get<int>()});
    for (const auto& row : j.at("chars")) {
        std::vector<std::complex<double>> r;
        for (const auto& v : row) {
            if (v.is_array())
                r.emplace_back(v[0].get<double>(), v[1].get<double>());
            else if (v.is_string())
                r.emplace_back(Rat(v.get<std::string>()).get_d(), 0.0);
            else
                r.emplace_back(v.get<double>(), 0.0);
        }
        t.chars.push_back(std::move(r));
    }
    t.verify();
    return t;
}

nlohmann::json read_table_file(const std::string& spec) {
    std::ifstream in(spec.substr(1));
    require(in.good(), "cannot open table file " + spec.substr(1));
    nlohmann::json j;
    in >> j;
    return j;
}

std::vector<long> sweep_schedule(long n) {
    std::vector<long> ns;
    for (long i = 1; i <= std::min<long>(n, 16); ++i) ns.push_back(i);
    for (long i = 32; i < n; i *= 2) ns.push_back(i);
    ns.push_back(n);
    return ns;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact tensor-power decomposition statistics"};
    app.fallthrough();  // global flags may follow the subcommand
    app.require_subcommand(1);
    app.add_option("--format", g_format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->default_val("json");
    long long cap_oracle = 10000;
    app.add_option("--cap-oracle", cap_oracle, "max a*b for the Jordan oracle");
    unsigned seed = 20240817;
    app.add_option("--seed", seed, "seed for randomized property fixtures")
        ->each([](const std::string& v) { selftest::seed() = std::stoul(v); });

    // ----- verlinde ---------------------------------------------------------------
    auto* ver = app.add_subcommand("verlinde", "the fusion ring Gr(Ver_p)");
    ver->require_subcommand(1);
    {
        auto* c = ver->add_subcommand("fuse", "product of two simples");
        auto p = std::make_shared<int>(5);
        auto i = std::make_shared<int>(1), j = std::make_shared<int>(1);
        c->add_option("--p", *p)->required();
        c->add_option("--i", *i)->required();
        c->add_option("--j", *j)->required();
        c->callback([=] {
            OutputRecord rec;
            rec.command = "verlinde fuse";
            rec.param("p", std::to_string(*p));
            rec.param("i", std::to_string(*i));
            rec.param("j", std::to_string(*j));
            RingElement r = VerlindeRing::fuse(*p, *i, *j);
            rec.raw("result", out::element_to_json(r));
            element_rows(rec, r);
            emit(rec);
        });
    }
    {
        auto* c = ver->add_subcommand("mul", "product of two objects");
        auto p = std::make_shared<int>(5);
        auto a = std::make_shared<std::string>(), b = std::make_shared<std::string>();
        c->add_option("--p", *p)->required();
        c->add_option("--a", *a, "coefficients of L_1..L_{p-1}")->required();
        c->add_option("--b", *b, "coefficients of L_1..L_{p-1}")->required();
        c->callback([=] {
            OutputRecord rec;
            rec.command = "verlinde mul";
            rec.param("p", std::to_string(*p));
            rec.param("a", *a);
            rec.param("b", *b);
            const VerlindeRing& ring = VerlindeRing::get(*p);
            RingElement r = ring.table().mul(parse_dense(*a, 1), parse_dense(*b, 1));
            rec.raw("result", out::element_to_json(r));
            element_rows(rec, r);
            emit(rec);
        });
    }
    {
        auto* c = ver->add_subcommand("delta", "delta character of an object");
        auto p = std::make_shared<int>(5);
        auto object = std::make_shared<std::string>();
        c->add_option("--p", *p)->required();
        c->add_option("--object", *object, "coefficients of L_1..L_{p-1}")->required();
        c->callback([=] {
            OutputRecord rec;
            rec.command = "verlinde delta";
            rec.param("p", std::to_string(*p));
            rec.param("object", *object);
            const VerlindeRing& ring = VerlindeRing::get(*p);
            DeltaValue d = ring.delta(parse_dense(*object, 1));
            nlohmann::json mv = nlohmann::json::array();
            for (const Int& m : d.multiplicities()) mv.push_back(m.get_str());
            rec.raw("multiplicities", mv);
            rec.approx_scalar("value", d.numeric());
            emit(rec);
        });
    }
    {
        auto* c = ver->add_subcommand("dn", "d_n and c_n along tensor powers");
        auto p = std::make_shared<int>(5);
        auto object = std::make_shared<std::string>();
        auto n = std::make_shared<long>(10);
        c->add_option("--p", *p)->required();
        c->add_option("--object", *object)->required();
        c->add_option("--n", *n)->required();
        c->callback([=] {
            OutputRecord rec;
            rec.command = "verlinde dn";
            rec.param("p", std::to_string(*p));
            rec.param("object", *object);
            rec.param("n", std::to_string(*n));
            const VerlindeRing& ring = VerlindeRing::get(*p);
            RingElement v = parse_dense(*object, 1);
            DeltaValue d = ring.delta(v);
            nlohmann::json mv = nlohmann::json::array();
            for (const Int& m : d.multiplicities()) mv.push_back(m.get_str());
            rec.raw("delta_multiplicities", mv);
            rec.approx_scalar("delta", d.numeric());
            rec.columns = {"n", "d_n", "c_n", "c_n_err"};
            for (const auto& row : ring.dn_sequence(v, *n))
                rec.rows.push_back({std::to_string(row.n), row.d_n.get_str(),
                                    out::fmt_double(row.c_n.value),
                                    out::fmt_double(row.c_n.err)});
            emit(rec);
        });
    }
    {
        auto* c = ver->add_subcommand("closure", "support closure and K_V");
        auto p = std::make_shared<int>(5);
        auto object = std::make_shared<std::string>();
        c->add_option("--p", *p)->required();
        c->add_option("--object", *object)->required();
        c->callback([=] {
            OutputRecord rec;
            rec.command = "verlinde closure";
            rec.param("p", std::to_string(*p));
            rec.param("object", *object);
            const VerlindeRing& ring = VerlindeRing::get(*p);
            auto kv = ring.kv(parse_dense(*object, 1));
            nlohmann::json cl = nlohmann::json::array();
            for (int k : kv.closure) cl.push_back(k);
            rec.raw("closure", cl);
            rec.scalar("kv_argmax", std::to_string(kv.argmax));
            rec.approx_scalar("kv", kv.value.numeric());
            emit(rec);
        });
    }
    {
        auto* c = ver->add_subcommand("p0", "margins of c_n >= K_V^{-1}");
        auto p = std::make_shared<int>(5);
        auto object = std::make_shared<std::string>();
        auto n = std::make_shared<long>(20);
        c->add_option("--p", *p)->required();
        c->add_option("--object", *object)->required();
        c->add_option("--n", *n)->required();
        c->callback([=] {
            OutputRecord rec;
            rec.command = "verlinde p0";
            rec.param("p", std::to_string(*p));
            rec.param("object", *object);
            rec.param("n", std::to_string(*n));
            const VerlindeRing& ring = VerlindeRing::get(*p);
            rec.columns = {"n", "margin", "exact_sign"};
            for (const auto& row : ring.check_p0(parse_dense(*object, 1), *n))
                rec.rows.push_back({std::to_string(row.n), out::fmt_double(row.margin),
                                    std::to_string(row.exact_sign)});
            emit(rec);
        });
    }
    {
        auto* c = ver->add_subcommand("bounds", "closed-form bound evaluators");
        auto p = std::make_shared<int>(5);
        auto d = std::make_shared<double>(1.0);
        auto ap = std::make_shared<double>(0.0);
        auto* ap_opt = c->add_option("--ap", *ap, "override a_p");
        c->add_option("--p", *p)->required();
        c->add_option("--d", *d, "delta(V)")->required();
        c->callback([=] {
            OutputRecord rec;
            rec.command = "verlinde bounds";
            rec.param("p", std::to_string(*p));
            rec.param("d", out::fmt_double(*d));
            std::optional<double> apv;
            if (ap_opt->count()) apv = *ap;
            rec.scalar("a_p", out::fmt_double(apv ? *apv : default_ap(*p)));
            rec.scalar("lambda_bound", out::fmt_double(bound_lambda(*p, *d, apv)));
            double lf = log_bound_fp(*p, *d, apv);
            rec.scalar("log_f_p", out::fmt_double(lf));
            rec.scalar("f_p", out::fmt_double(std::exp(lf)));
            if (*p == 2) {
                double lk = log_bound_kv_p2(*d);
                rec.scalar("log_kv_bound", out::fmt_double(lk));
                rec.scalar("kv_bound", out::fmt_double(std::exp(lk)));
            }
            emit(rec);
        });
    }
    {
        auto* c = ver->add_subcommand("qint", "q-integer inequality chain");
        auto p = std::make_shared<int>(5);
        c->add_option("--p", *p)->required();
        c->callback([=] {
            OutputRecord rec;
            rec.command = "verlinde qint";
            rec.param("p", std::to_string(*p));
            bool ok = false;
            rec.columns = {"k", "min", "mid", "rhs", "margin1", "margin2"};
            for (const auto& row : qint_inequality_check(*p, &ok))
                rec.rows.push_back({std::to_string(row.k), out::fmt_double(row.lhs),
                                    out::fmt_double(row.mid), out::fmt_double(row.rhs),
                                    out::fmt_double(row.margin1),
                                    out::fmt_double(row.margin2)});
            rec.scalar("ok", ok ? "true" : "false");
            emit(rec);
        });
    }

    // ----- kp ----------------------------------------------------------------------
    auto* kp = app.add_subcommand("kp", "the based ring K_p");
    kp->require_subcommand(1);
    {
        auto* c = kp->add_subcommand("table", "full structure-constant table");
        auto p = std::make_shared<int>(5);
        c->add_option("--p", *p)->required();
        c->callback([=] {
            OutputRecord rec;
            rec.command = "kp table";
            rec.param("p", std::to_string(*p));
            const KpRing& ring = KpRing::get(*p);
            rec.columns = {"i", "j", "k", "N_ij^k"};
            for (int i = 0; i < *p; ++i)
                for (int j = i; j < *p; ++j)
                    for (const auto& [k, n] : ring.table().product(i, j).coeffs())
                        rec.rows.push_back({std::to_string(i), std::to_string(j),
                                            std::to_string(k), n.get_str()});
            emit(rec);
        });
    }
    {
        auto* c = kp->add_subcommand("phi", "characters and homomorphisms of K_p");
        auto p = std::make_shared<int>(5);
        auto map = std::make_shared<std::string>("1");
        c->add_option("--p", *p)->required();
        c->add_option("--map", *map, "1 | 2 | 3 | fpdim")
            ->check(CLI::IsMember({"1", "2", "3", "fpdim"}));
        c->callback([=] {
            OutputRecord rec;
            rec.command = "kp phi";
            rec.param("p", std::to_string(*p));
            rec.param("map", *map);
            const KpRing& ring = KpRing::get(*p);
            if (*map == "3") {
                rec.columns = {"i", "value"};
                for (int i = 0; i < *p; ++i)
                    rec.rows.push_back({std::to_string(i), std::to_string(KpRing::phi3(i))});
            } else if (*map == "fpdim") {
                rec.columns = {"i", "value", "value_err"};
                for (int i = 0; i < *p; ++i) {
                    Approx a = ring.fpdim_char(i).numeric();
                    rec.rows.push_back({std::to_string(i), out::fmt_double(a.value),
                                        out::fmt_double(a.err)});
                }
            } else {
                rec.columns = {"i", "image"};
                for (int i = 0; i < *p; ++i) {
                    RingElement img = (*map == "1") ? ring.phi1(i) : ring.phi2(i);
                    rec.rows.push_back({std::to_string(i),
                                        out::element_to_json(img).dump()});
                }
            }
            emit(rec);
        });
    }

    // ----- green --------------------------------------------------------------------
    auto* gr = app.add_subcommand("green", "the Green ring of Z/p^n");
    gr->require_subcommand(1);
    auto add_ctx = [](CLI::App* c, std::shared_ptr<int> p, std::shared_ptr<int> levels) {
        c->add_option("--p", *p)->required();
        c->add_option("--levels", *levels, "n in Z/p^n")->required();
    };
    {
        auto* c = gr->add_subcommand("wv", "w v_r via Green's first formula");
        auto p = std::make_shared<int>(3), levels = std::make_shared<int>(2);
        auto q = std::make_shared<long long>(3), r = std::make_shared<long long>(1);
        add_ctx(c, p, levels);
        c->add_option("--q", *q)->required();
        c->add_option("--r", *r)->required();
        c->callback([=] {
            OutputRecord rec;
            rec.command = "green wv";
            rec.param("p", std::to_string(*p));
            rec.param("levels", std::to_string(*levels));
            rec.param("q", std::to_string(*q));
            rec.param("r", std::to_string(*r));
            green::CyclicContext ctx(*p, *levels);
            RingElement res = green::w_mul(ctx, *q, *r);
            rec.scalar("basis", "v");
            rec.raw("result", out::element_to_json(res));
            element_rows(rec, res);
            emit(rec);
        });
    }
    {
        auto* c = gr->add_subcommand("vq1", "v_{q-1} v_r via Green's second formula");
        auto p = std::make_shared<int>(3), levels = std::make_shared<int>(2);
        auto q = std::make_shared<long long>(3), r = std::make_shared<long long>(1);
        add_ctx(c, p, levels);
        c->add_option("--q", *q)->required();
        c->add_option("--r", *r)->required();
        c->callback([=] {
            OutputRecord rec;
            rec.command = "green vq1";
            rec.param("p", std::to_string(*p));
            rec.param("levels", std::to_string(*levels));
            rec.param("q", std::to_string(*q));
            rec.param("r", std::to_string(*r));
            green::CyclicContext ctx(*p, *levels);
            RingElement res = green::vq1_mul(ctx, *q, *r);
            rec.scalar("basis", "v");
            rec.raw("result", out::element_to_json(res));
            element_rows(rec, res);
            emit(rec);
        });
    }
    {
        auto* c = gr->add_subcommand("project", "semisimplification projection");
        auto p = std::make_shared<int>(3), levels = std::make_shared<int>(2);
        auto elem = std::make_shared<std::string>();
        add_ctx(c, p, levels);
        c->add_option("--elem", *elem, "sparse element r:c,...")->required();
        c->callback([=] {
            OutputRecord rec;
            rec.command = "green project";
            rec.param("p", std::to_string(*p));
            rec.param("levels", std::to_string(*levels));
            rec.param("elem", *elem);
            green::CyclicContext ctx(*p, *levels);
            RingElement res = green::project(ctx, parse_sparse(*elem));
            rec.scalar("basis", "u");
            rec.raw("result", out::element_to_json(res));
            element_rows(rec, res);
            emit(rec);
        });
    }
    {
        auto* c = gr->add_subcommand("factorize", "coordinates of u_r");
        auto p = std::make_shared<int>(5), levels = std::make_shared<int>(5);
        auto r = std::make_shared<long long>(1);
        add_ctx(c, p, levels);
        c->add_option("--r", *r)->required();
        c->callback([=] {
            OutputRecord rec;
            rec.command = "green factorize";
            rec.param("p", std::to_string(*p));
            rec.param("levels", std::to_string(*levels));
            rec.param("r", std::to_string(*r));
            green::CyclicContext ctx(*p, *levels);
            rec.raw("result", out::factorized_to_json(green::factorize(ctx, *r)));
            emit(rec);
        });
    }
    {
        auto* c = gr->add_subcommand("reconstruct", "u-index of a coordinate tuple");
        auto p = std::make_shared<int>(5), levels = std::make_shared<int>(5);
        auto base = std::make_shared<int>(1);
        auto xs = std::make_shared<std::string>();
        add_ctx(c, p, levels);
        c->add_option("--base", *base, "Ver_p simple index")->required();
        c->add_option("--xs", *xs, "K_p indices per level, comma separated")->required();
        c->callback([=] {
            OutputRecord rec;
            rec.command = "green reconstruct";
            rec.param("p", std::to_string(*p));
            rec.param("levels", std::to_string(*levels));
            rec.param("base", std::to_string(*base));
            rec.param("xs", *xs);
            green::CyclicContext ctx(*p, *levels);
            green::FactorizedClass fc;
            fc.base = *base;
            fc.levels = parse_int_list(*xs);
            rec.scalar("r", std::to_string(green::reconstruct(ctx, fc)));
            emit(rec);
        });
    }
    {
        auto* c = gr->add_subcommand("ssmul", "u_a u_b in the semisimplified ring");
        auto p = std::make_shared<int>(2), levels = std::make_shared<int>(7);
        auto a = std::make_shared<long long>(1), b = std::make_shared<long long>(1);
        auto oracle = std::make_shared<bool>(false);
        add_ctx(c, p, levels);
        c->add_option("--a", *a)->required();
        c->add_option("--b", *b)->required();
        c->add_flag("--oracle", *oracle, "route through the Jordan oracle");
        c->callback([=, &cap_oracle] {
            OutputRecord rec;
            rec.command = "green ssmul";
            rec.param("p", std::to_string(*p));
            rec.param("levels", std::to_string(*levels));
            rec.param("a", std::to_string(*a));
            rec.param("b", std::to_string(*b));
            rec.param("oracle", *oracle ? "true" : "false");
            green::CyclicContext ctx(*p, *levels);
            require(*a % *p != 0 && *b % *p != 0, "ssmul: negligible input (p divides a or b)");
            RingElement res;
            if (*oracle) {
                jordan::OracleLimits lim = jordan::OracleLimits::from_env();
                lim.cap_product = cap_oracle;
                res = green::project(ctx,
                                     jordan::oracle_mul(*p, *levels, *a, *b, lim).to_element());
            } else {
                res = green::ssbar_mul(ctx, *a, *b);
            }
            rec.scalar("basis", "u");
            rec.raw("result", out::element_to_json(res));
            element_rows(rec, res);
            emit(rec);
        });
    }
    {
        auto* c = gr->add_subcommand("mul", "v_a v_b in the full Green ring (oracle)");
        auto p = std::make_shared<int>(3), levels = std::make_shared<int>(2);
        auto a = std::make_shared<long long>(1), b = std::make_shared<long long>(1);
        auto oracle = std::make_shared<bool>(false);
        add_ctx(c, p, levels);
        c->add_option("--a", *a)->required();
        c->add_option("--b", *b)->required();
        c->add_flag("--oracle", *oracle, "compute by exact F_p linear algebra");
        c->callback([=, &cap_oracle] {
            OutputRecord rec;
            rec.command = "green mul";
            rec.param("p", std::to_string(*p));
            rec.param("levels", std::to_string(*levels));
            rec.param("a", std::to_string(*a));
            rec.param("b", std::to_string(*b));
            require(*oracle, "green mul: pass --oracle (the only implemented route)");
            green::CyclicContext ctx(*p, *levels);
            jordan::OracleLimits lim = jordan::OracleLimits::from_env();
            lim.cap_product = cap_oracle;
            RingElement res = jordan::oracle_mul(*p, *levels, *a, *b, lim).to_element();
            rec.scalar("basis", "v");
            rec.raw("result", out::element_to_json(res));
            element_rows(rec, res);
            emit(rec);
        });
    }
    {
        auto* c = gr->add_subcommand("dn", "d_n and c_n of a semisimple class");
        auto p = std::make_shared<int>(3), levels = std::make_shared<int>(2);
        auto r = std::make_shared<long long>(1);
        auto n = std::make_shared<long>(10);
        add_ctx(c, p, levels);
        c->add_option("--r", *r)->required();
        c->add_option("--n", *n)->required();
        c->callback([=] {
            OutputRecord rec;
            rec.command = "green dn";
            rec.param("p", std::to_string(*p));
            rec.param("levels", std::to_string(*levels));
            rec.param("r", std::to_string(*r));
            rec.param("n", std::to_string(*n));
            green::CyclicContext ctx(*p, *levels);
            rec.approx_scalar("delta", green::delta_class(ctx, *r));
            rec.columns = {"n", "d_n", "c_n", "c_n_err"};
            for (const auto& row : green::dn_cyclic(ctx, *r, *n))
                rec.rows.push_back({std::to_string(row.n), row.d_n.get_str(),
                                    out::fmt_double(row.c_n.value),
                                    out::fmt_double(row.c_n.err)});
            emit(rec);
        });
    }

    // ----- asym ---------------------------------------------------------------------
    {
        auto* c = app.add_subcommand("asym", "characteristic-zero asymptotics");
        auto system = std::make_shared<std::string>("A1");
        auto preset = std::make_shared<std::string>("L1");
        auto n = std::make_shared<long>(16);
        auto s = std::make_shared<double>(0.0);
        auto want_ratio = std::make_shared<bool>(false);
        auto want_cv = std::make_shared<bool>(false);
        auto want_mmo = std::make_shared<bool>(false);
        c->add_option("--system", *system, "A1, A2, B2, G2 or products like A1xA2");
        c->add_option("--preset", *preset, "weight preset per factor, comma separated");
        c->add_option("--n", *n, "horizon");
        c->add_option("--s", *s, "exponent s");
        c->add_flag("--ratio", *want_ratio, "include the normalized ratio column");
        c->add_flag("--cv", *want_cv, "include the closed form C_V(s)");
        c->add_flag("--mmo", *want_mmo, "include the MMO identity residual");
        c->callback([=] {
            OutputRecord rec;
            rec.command = "asym";
            rec.param("system", *system);
            rec.param("preset", *preset);
            rec.param("n", std::to_string(*n));
            rec.param("s", out::fmt_double(*s));
            rs::RootSystem sys = rs::builtin_system(*system);
            asym::PresetRep rep = asym::weight_preset(sys, *preset);
            double cv = (*want_ratio || *want_cv) ? asym::cvs(sys, rep.factor_parts, *s)
                                                  : 0.0;
            if (*want_cv) rec.scalar("cv", out::fmt_double(cv));
            if (*want_mmo) {
                asym::MmoResult m = asym::mmo_check(sys, *s);
                rec.scalar("mmo_lhs", out::fmt_double(m.lhs));
                rec.scalar("mmo_rhs", out::fmt_double(m.rhs));
                rec.scalar("mmo_residual", out::fmt_double(m.residual));
            }
            rec.columns = {"n", "d_n_s", "ratio", "cv_target"};
            double log_dim = asym::log_of_int(rep.joint.total());
            for (const auto& [nn, val] : asym::dns_sweep(sys, rep.joint, sweep_schedule(*n), *s)) {
                double log_dns = val.exact ? asym::log_of_int(*val.exact)
                                           : std::log(val.value);
                double ratio = std::exp(log_dns - nn * log_dim -
                                        0.5 * (*s - 1.0) * sys.num_pos() *
                                            std::log(static_cast<double>(nn)));
                rec.rows.push_back({std::to_string(nn),
                                    val.exact ? val.exact->get_str()
                                              : out::fmt_double(val.value),
                                    *want_ratio ? out::fmt_double(ratio) : "",
                                    *want_ratio || *want_cv ? out::fmt_double(cv) : ""});
            }
            emit(rec);
        });
    }

    // ----- group --------------------------------------------------------------------
    auto* grpc = app.add_subcommand("group", "finite groups via character tables");
    grpc->require_subcommand(1);
    auto table_opt = [](CLI::App* c, std::shared_ptr<std::string> table) {
        c->add_option("--table", *table, "built-in name or @file.json")->required();
    };
    {
        auto* c = grpc->add_subcommand("cn", "the sequence c_n(V)");
        auto table = std::make_shared<std::string>("S3");
        auto repspec = std::make_shared<std::string>();
        auto n = std::make_shared<long>(10);
        table_opt(c, table);
        c->add_option("--rep", *repspec, "irreducible multiplicities, comma separated")
            ->required();
        c->add_option("--n", *n)->required();
        c->callback([=] {
            OutputRecord rec;
            rec.command = "group cn";
            rec.param("table", *table);
            rec.param("rep", *repspec);
            rec.param("n", std::to_string(*n));
            std::vector<Int> mult = parse_mults(*repspec);
            rec.columns = {"n", "c_n"};
            if ((*table)[0] == '@') {
                nlohmann::json j = read_table_file(*table);
                if (looks_rational(j.at("chars"))) {
                    grp::CharacterTable t = load_exact_table(j);
                    for (long i = 1; i <= *n; ++i)
                        rec.rows.push_back({std::to_string(i), grp::cn(t, mult, i).get_str()});
                } else {
                    grp::ApproxCharacterTable t = load_approx_table(j);
                    for (long i = 1; i <= *n; ++i)
                        rec.rows.push_back({std::to_string(i),
                                            out::fmt_double(grp::approx_cn(t, mult, i))});
                }
            } else {
                grp::CharacterTable t = grp::builtin_table(*table);
                for (long i = 1; i <= *n; ++i)
                    rec.rows.push_back({std::to_string(i), grp::cn(t, mult, i).get_str()});
            }
            emit(rec);
        });
    }
    {
        auto* c = grpc->add_subcommand("climit", "the limit c(V)");
        auto table = std::make_shared<std::string>("S3");
        auto repspec = std::make_shared<std::string>();
        table_opt(c, table);
        c->add_option("--rep", *repspec)->required();
        c->callback([=] {
            OutputRecord rec;
            rec.command = "group climit";
            rec.param("table", *table);
            rec.param("rep", *repspec);
            std::vector<Int> mult = parse_mults(*repspec);
            if ((*table)[0] == '@') {
                nlohmann::json j = read_table_file(*table);
                if (looks_rational(j.at("chars"))) {
                    grp::CharacterTable t = load_exact_table(j);
                    rec.scalar("climit", grp::climit(t, mult).get_str());
                    rec.scalar("cs_bound", out::fmt_double(grp::cs_bound(t)));
                } else {
                    grp::ApproxCharacterTable t = load_approx_table(j);
                    rec.scalar("climit", out::fmt_double(grp::approx_climit(t, mult)));
                }
            } else {
                grp::CharacterTable t = grp::builtin_table(*table);
                rec.scalar("climit", grp::climit(t, mult).get_str());
                rec.scalar("cs_bound", out::fmt_double(grp::cs_bound(t)));
            }
            emit(rec);
        });
    }
    {
        auto* c = grpc->add_subcommand("bound", "the Cauchy-Schwarz bound sqrt(k/|G|)");
        auto table = std::make_shared<std::string>("S3");
        auto delta = std::make_shared<double>(0.0);
        table_opt(c, table);
        auto* delta_opt = c->add_option(
            "--delta", *delta, "also report the non-rigorous two-term reference curve");
        c->callback([=] {
            OutputRecord rec;
            rec.command = "group bound";
            rec.param("table", *table);
            grp::CharacterTable t = ((*table)[0] == '@')
                                        ? load_exact_table(read_table_file(*table))
                                        : grp::builtin_table(*table);
            rec.scalar("k", std::to_string(t.k()));
            rec.scalar("order", std::to_string(t.order));
            rec.scalar("cs_bound", out::fmt_double(grp::cs_bound(t)));
            if (delta_opt->count()) {
                rec.scalar("reference_curve", out::fmt_double(grp::js_reference_curve(*delta)));
                rec.scalar("reference_curve_note", "two leading terms only, not rigorous");
            }
            emit(rec);
        });
    }

    // ----- lie ----------------------------------------------------------------------
    auto* liec = app.add_subcommand("lie", "Dynkin data and decompositions");
    liec->require_subcommand(1);
    {
        auto* c = liec->add_subcommand("gdecomp", "exponent pruning at p > h");
        auto type = std::make_shared<std::string>("E7");
        auto p = std::make_shared<int>(23);
        c->add_option("--type", *type)->required();
        c->add_option("--p", *p)->required();
        c->callback([=] {
            OutputRecord rec;
            rec.command = "lie gdecomp";
            rec.param("type", *type);
            rec.param("p", std::to_string(*p));
            rec.raw("result", lie::g_decomp(lie::parse_type(*type), *p));
            emit(rec);
        });
    }
    {
        auto* c = liec->add_subcommand("strange", "the self-dual strange formula");
        auto type = std::make_shared<std::string>();
        auto all = std::make_shared<bool>(false);
        c->add_option("--type", *type);
        c->add_flag("--all", *all, "all families at ranks up to 8");
        c->callback([=] {
            OutputRecord rec;
            rec.command = "lie strange";
            rec.columns = {"type", "ok"};
            std::vector<lie::DynkinType> types;
            if (*all) {
                for (int r = 1; r <= 8; ++r) types.push_back(lie::make_type(lie::Family::A, r));
                for (int r = 2; r <= 8; ++r) {
                    types.push_back(lie::make_type(lie::Family::B, r));
                    types.push_back(lie::make_type(lie::Family::C, r));
                }
                for (int r = 4; r <= 8; ++r) types.push_back(lie::make_type(lie::Family::D, r));
                for (int r = 6; r <= 8; ++r) types.push_back(lie::make_type(lie::Family::E, r));
                types.push_back(lie::make_type(lie::Family::F, 4));
                types.push_back(lie::make_type(lie::Family::G, 2));
                rec.param("all", "true");
            } else {
                require(!type->empty(), "lie strange: need --type or --all");
                rec.param("type", *type);
                types.push_back(lie::parse_type(*type));
            }
            bool ok_all = true;
            for (const auto& t : types) {
                bool ok = lie::strange_check(t);
                ok_all = ok_all && ok;
                rec.rows.push_back({t.str(), ok ? "true" : "false"});
            }
            rec.scalar("ok", ok_all ? "true" : "false");
            emit(rec);
        });
    }
    {
        auto* c = liec->add_subcommand("gaussd", "balanced Gauss-polynomial dimension d_r");
        auto r = std::make_shared<int>(7);
        c->add_option("--r", *r)->required();
        c->callback([=] {
            OutputRecord rec;
            rec.command = "lie gaussd";
            rec.param("r", std::to_string(*r));
            auto [a0, a2] = lie::gauss_balanced_a0_a2(*r);
            rec.scalar("a0", a0.get_str());
            rec.scalar("a2", a2.get_str());
            rec.scalar("d_r", lie::gauss_d(*r).get_str());
            emit(rec);
        });
    }
    {
        auto* c = liec->add_subcommand("rank2", "rank-2 catalogue at p");
        auto p = std::make_shared<int>(11);
        c->add_option("--p", *p)->required();
        c->callback([=] {
            OutputRecord rec;
            rec.command = "lie rank2";
            rec.param("p", std::to_string(*p));
            rec.columns = {"name", "decomp"};
            nlohmann::json entries = nlohmann::json::array();
            for (const auto& e : lie::rank2_catalogue(*p)) {
                nlohmann::json je;
                je["name"] = e.name;
                je["decomp"] = e.decomp;
                entries.push_back(je);
                std::string ds;
                for (std::size_t i = 0; i < e.decomp.size(); ++i)
                    ds += (i ? "+" : "") + std::to_string(e.decomp[i]);
                rec.rows.push_back({e.name, ds});
            }
            rec.raw("entries", entries);
            emit(rec);
        });
    }

    // ----- selftest -----------------------------------------------------------------
    {
        auto* c = app.add_subcommand("selftest", "run every golden fixture");
        auto filter = std::make_shared<std::string>();
        auto list_only = std::make_shared<bool>(false);
        c->add_option("--filter", *filter, "substring filter on fixture ids");
        c->add_flag("--list", *list_only, "list fixture ids without running");
        c->callback([=] {
            OutputRecord rec;
            rec.command = "selftest";
            if (!filter->empty()) rec.param("filter", *filter);
            if (*list_only) {
                rec.columns = {"id", "description"};
                for (const auto& f : selftest::all_fixtures())
                    rec.rows.push_back({f.id, f.description});
                emit(rec);
                return;
            }
            selftest::Report rep = selftest::run(*filter);
            rec.columns = {"id", "status", "detail", "provenance"};
            std::map<std::string, std::string> desc;
            for (const auto& f : selftest::all_fixtures()) desc[f.id] = f.description;
            for (const auto& r : rep.results)
                rec.rows.push_back({r.id, r.pass ? "pass" : "FAIL", r.detail, desc[r.id]});
            rec.scalar("fixtures", std::to_string(rep.results.size()));
            rec.scalar("failures", std::to_string(rep.failures));
            emit(rec);
            if (rep.failures > 0) {
                for (const auto& r : rep.results)
                    if (!r.pass) {
                        std::cerr << "selftest failure: " << r.id << ": " << r.detail << "\n";
                        break;
                    }
                throw precondition_error("selftest failed");
            }
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 64;
    } catch (const precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
