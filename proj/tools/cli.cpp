#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "shiftlab/errors.hpp"
#include "shiftlab/families.hpp"
#include "shiftlab/kernel.hpp"
#include "shiftlab/lp.hpp"
#include "shiftlab/polynomial.hpp"
#include "shiftlab/serialize.hpp"
#include "shiftlab/spectra.hpp"
#include "shiftlab/truncation.hpp"

namespace shiftlab::cli {

namespace {

using nlohmann::json;

double parse_p(const std::string& text) {
    if (text == "inf" || text == "Inf" || text == "INF") return std::numeric_limits<double>::infinity();
    std::size_t used = 0;
    const double p = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument("cannot parse exponent: '" + text + "'");
    return p;
}

struct FamilyFlags {
    std::string family;
    int dim = 2;
    int n = 2;
    std::string spec;

    void attach(CLI::App* cmd, bool tail_only = false) {
        auto* opt = cmd->add_option("--family", family,
                                    tail_only ? "kite | flyswatter | comb"
                                              : "lattice | triangular | hexagonal | ladder | ray | "
                                                "kite | flyswatter | comb | infinite-comb | tree");
        opt->required();
        cmd->add_option("--dim", dim, "lattice dimension (lattice only)");
        cmd->add_option("--n", n, "finite-part size (kite, flyswatter, comb)");
        cmd->add_option("--spec", spec, "tree spec JSON (tree only)");
    }

    GraphFamily make() const {
        if (family == "lattice") return make_lattice(dim);
        if (family == "triangular") return make_triangular();
        if (family == "hexagonal") return make_hexagonal();
        if (family == "ladder") return make_ladder();
        if (family == "ray") return make_ray();
        if (family == "kite") return make_tail_graph(TailGraphKind::Kite, n);
        if (family == "flyswatter") return make_tail_graph(TailGraphKind::FlySwatter, n);
        if (family == "comb") return make_tail_graph(TailGraphKind::CombWithTail, n);
        if (family == "infinite-comb") return make_infinite_comb();
        if (family == "tree") {
            if (spec.empty()) throw std::invalid_argument("--family tree needs --spec");
            return make_tree(parse_tree_spec(spec));
        }
        throw std::invalid_argument("unknown family: '" + family + "'");
    }

    TailGraphKind tail_kind() const {
        if (family == "kite") return TailGraphKind::Kite;
        if (family == "flyswatter") return TailGraphKind::FlySwatter;
        if (family == "comb") return TailGraphKind::CombWithTail;
        throw std::invalid_argument("subcommand needs a tail-attached family (kite, flyswatter, comb)");
    }

    json echo() const {
        json p;
        p["family"] = family;
        if (family == "lattice") p["dim"] = dim;
        if (family == "kite" || family == "flyswatter" || family == "comb") p["n"] = n;
        if (family == "tree") p["spec"] = json::parse(tree_spec_to_json(parse_tree_spec(spec)));
        return p;
    }
};

// shared output sink for one invocation
struct Invocation {
    std::ostream& out;

    void emit_json(const std::string& command, json parameters, const std::string& payload_text,
                   double elapsed_ms) {
        json doc;
        doc["command"] = command;
        doc["parameters"] = std::move(parameters);
        doc["payload"] = json::parse(payload_text);
        doc["elapsed_ms"] = elapsed_ms;
        out << doc.dump() << '\n';
    }

    void emit_raw(const std::string& text) { out << text; }
};

// runs fn, wrapping its payload into the envelope with wall-clock timing
void wrapped(Invocation& inv, const std::string& command, json parameters,
             const std::function<std::string()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    const std::string payload = fn();
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    inv.emit_json(command, std::move(parameters), payload, ms);
}

std::vector<std::int64_t> parse_int_csv(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoll(item));
    return out;
}

TSequence parse_t_sequence(const std::string& text) {
    if (text == "squares") return TSequence::squares();
    if (text == "selfpow") return TSequence::selfpow();
    return TSequence::explicit_prefix(parse_int_csv(text));
}

void add_gamma(CLI::App& app, Invocation& inv) {
    auto cmd = app.add_subcommand("gamma", "coordination sequence by BFS");
    auto flags = std::make_shared<FamilyFlags>();
    auto nmax = std::make_shared<int>(10);
    auto csv = std::make_shared<bool>(false);
    auto cap = std::make_shared<std::size_t>(Truncation::kDefaultVertexCap);
    flags->attach(cmd);
    cmd->add_option("--nmax", *nmax, "highest level")->required();
    cmd->add_flag("--csv", *csv, "emit CSV rows n,gamma");
    cmd->add_option("--cap", *cap, "truncation vertex cap");
    cmd->callback([&inv, flags, nmax, csv, cap] {
        const auto gamma = gamma_sequence(flags->make(), *nmax, *cap);
        if (*csv) {
            inv.emit_raw(to_csv_text(gamma));
            return;
        }
        json params = flags->echo();
        params["nmax"] = *nmax;
        wrapped(inv, "gamma", std::move(params), [&] { return to_json_text(gamma); });
    });
}

void add_ratio(CLI::App& app, Invocation& inv) {
    auto cmd = app.add_subcommand("ratio", "shell-to-ball ratio (gamma(n)+gamma(n+1)) / ball(n)");
    auto flags = std::make_shared<FamilyFlags>();
    auto n = std::make_shared<int>(10);
    auto cap = std::make_shared<std::size_t>(Truncation::kDefaultVertexCap);
    flags->attach(cmd);
    cmd->add_option("--index", *n, "shell index n")->required();
    cmd->add_option("--cap", *cap, "truncation vertex cap");
    cmd->callback([&inv, flags, n, cap] {
        json params = flags->echo();
        params["index"] = *n;
        wrapped(inv, "ratio", std::move(params), [&] {
            const auto family = flags->make();
            const auto gamma = gamma_sequence(family, *n + 1, *cap);
            json payload;
            payload["family"] = family.name();
            payload["n"] = *n;
            payload["ratio"] = euclidean_ratio(gamma, *n);
            return payload.dump();
        });
    });
}

void add_norm(CLI::App& app, Invocation& inv) {
    auto cmd = app.add_subcommand("norm", "certified operator-norm bracket");
    auto flags = std::make_shared<FamilyFlags>();
    auto p_text = std::make_shared<std::string>("2");
    auto budget = std::make_shared<int>(60);
    auto cap = std::make_shared<std::size_t>(Truncation::kDefaultVertexCap);
    flags->attach(cmd);
    cmd->add_option("--p", *p_text, "exponent in [1, inf]; literal 'inf' allowed");
    cmd->add_option("--budget", *budget, "witness support budget");
    cmd->add_option("--cap", *cap, "truncation vertex cap");
    cmd->callback([&inv, flags, p_text, budget, cap] {
        json params = flags->echo();
        params["p"] = *p_text;
        params["budget"] = *budget;
        wrapped(inv, "norm", std::move(params), [&] {
            const auto bracket =
                norm_bounds(flags->make(), Exponent::of(parse_p(*p_text)), *budget, *cap);
            return to_json_text(bracket);
        });
    });
}

void add_witness(CLI::App& app, Invocation& inv) {
    auto cmd = app.add_subcommand("witness", "materialize a proof witness and its Rayleigh ratio");
    auto flags = std::make_shared<FamilyFlags>();
    auto kind = std::make_shared<std::string>("ball");
    auto n = std::make_shared<int>(5);
    auto p_text = std::make_shared<std::string>("2");
    auto except_n = std::make_shared<int>(0);
    auto cap = std::make_shared<std::size_t>(Truncation::kDefaultVertexCap);
    flags->attach(cmd);
    cmd->add_option("--kind", *kind, "ball | treeweight");
    cmd->add_option("--support", *n, "witness support level n")->required();
    cmd->add_option("--p", *p_text, "exponent (treeweight shape and the ratio)");
    cmd->add_option("--except-n", *except_n, "treeweight: lowest excluded level N");
    cmd->add_option("--cap", *cap, "truncation vertex cap");
    cmd->callback([&inv, flags, kind, n, p_text, except_n, cap] {
        json params = flags->echo();
        params["kind"] = *kind;
        params["support"] = *n;
        params["p"] = *p_text;
        wrapped(inv, "witness", std::move(params), [&] {
            const auto family = flags->make();
            const double p = parse_p(*p_text);
            auto trunc = std::make_shared<const Truncation>(family, *n + 1, *cap);
            LpFunction f = *kind == "ball"
                               ? ball_indicator(trunc, *n)
                               : tree_weight_witness(trunc, family.degree_bound(), p, *except_n, *n);
            const Exponent expo = Exponent::of(p);
            json payload;
            payload["family"] = family.name();
            payload["kind"] = *kind;
            payload["n"] = *n;
            payload["support_size"] = [&] {
                std::size_t count = 0;
                for (std::size_t i = 0; i < f.size(); ++i)
                    if (f.value(i) != 0.0) ++count;
                return count;
            }();
            payload["norm"] = lp_norm(f, expo);
            payload["rayleigh"] = rayleigh_ratio(f, expo);
            return payload.dump();
        });
    });
}

struct TreeChoice {
    std::int64_t m = 0;
    std::int64_t M = 0;
    std::string spec;

    void attach(CLI::App* cmd) {
        cmd->add_option("--m", m, "alternating tree: children at even levels");
        cmd->add_option("--M", M, "alternating tree: children at odd levels");
        cmd->add_option("--spec", spec, "tree spec JSON (any leafless tree)");
    }

    bool alternating() const { return spec.empty(); }

    TreeSpec tree_spec() const {
        if (!spec.empty()) return parse_tree_spec(spec);
        if (m < 1 || M < 1)
            throw std::invalid_argument("kernel commands need --m/--M or --spec");
        return AlternatingTreeSpec{m, M};
    }

    json echo() const {
        json p;
        if (!spec.empty())
            p["spec"] = json::parse(tree_spec_to_json(parse_tree_spec(spec)));
        else {
            p["m"] = m;
            p["M"] = M;
        }
        return p;
    }
};

json kernel_values_by_level(const LpFunction& f) {
    // all shipped trees are level-regular, so one value per level describes f
    const auto& trunc = f.truncation();
    json values = json::array();
    int last_level = -1;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (trunc.level(i) == last_level) continue;
        last_level = trunc.level(i);
        if (last_level > f.support_radius()) break;
        values.push_back(to_string(f.exact_value(i)));
    }
    return values;
}

void add_kernel(CLI::App& app, Invocation& inv) {
    auto cmd = app.add_subcommand("kernel", "kernel elements of the shift on leafless trees");
    cmd->require_subcommand(1);

    {
        auto build = cmd->add_subcommand("build", "construct a kernel element (exact rationals)");
        auto choice = std::make_shared<TreeChoice>();
        auto depth = std::make_shared<int>(8);
        auto cap = std::make_shared<std::size_t>(Truncation::kDefaultVertexCap);
        choice->attach(build);
        build->add_option("--depth", *depth, "even support depth")->required();
        build->add_option("--cap", *cap, "truncation vertex cap");
        build->callback([&inv, choice, depth, cap] {
            json params = choice->echo();
            params["depth"] = *depth;
            wrapped(inv, "kernel build", std::move(params), [&] {
                const TreeSpec spec = choice->tree_spec();
                LpFunction f = choice->alternating()
                                   ? alternating_kernel(choice->m, choice->M, *depth, *cap)
                                   : inductive_kernel(make_tree(spec), *depth, *cap);
                const auto image = apply_shift(f);
                bool vanishes = true;
                const auto& trunc = f.truncation();
                const std::size_t end = trunc.first_index_above_level(trunc.interior_radius());
                for (std::size_t i = 0; i < end && vanishes; ++i)
                    if (image.function.exact_value(i) != 0) vanishes = false;
                json payload;
                payload["tree"] = tree_spec_name(spec);
                payload["depth"] = *depth;
                payload["values_by_level"] = kernel_values_by_level(f);
                payload["shift_vanishes_exactly"] = vanishes;
                return payload.dump();
            });
        });
    }

    {
        auto classify = cmd->add_subcommand("classify", "kernel triviality from (m, M, p)");
        auto m = std::make_shared<std::int64_t>(1);
        auto M = std::make_shared<std::int64_t>(1);
        auto except_n = std::make_shared<std::int64_t>(0);
        auto p_text = std::make_shared<std::string>("2");
        classify->add_option("--m", *m, "essential min child count")->required();
        classify->add_option("--M", *M, "essential max child count")->required();
        classify->add_option("--p", *p_text, "exponent; literal 'inf' allowed")->required();
        classify->add_option("--except-n", *except_n, "exceptional radius N");
        classify->callback([&inv, m, M, except_n, p_text] {
            json params = {{"m", *m}, {"M", *M}, {"p", *p_text}};
            wrapped(inv, "kernel classify", std::move(params), [&] {
                const double p = parse_p(*p_text);
                const auto cls = classify_kernel({*m, *M, *except_n}, Exponent::of(p));
                return kernel_class_json(*m, *M, p, cls);
            });
        });
    }

    {
        auto sums = cmd->add_subcommand("sums", "level power sums sigma_k of a kernel element");
        auto choice = std::make_shared<TreeChoice>();
        auto depth = std::make_shared<int>(10);
        auto p_text = std::make_shared<std::string>("2");
        auto csv = std::make_shared<bool>(false);
        auto cap = std::make_shared<std::size_t>(Truncation::kDefaultVertexCap);
        choice->attach(sums);
        sums->add_option("--depth", *depth, "even support depth")->required();
        sums->add_option("--p", *p_text, "finite exponent");
        sums->add_flag("--csv", *csv, "emit CSV rows k,sigma_k,ratio");
        sums->add_option("--cap", *cap, "truncation vertex cap");
        sums->callback([&inv, choice, depth, p_text, csv, cap] {
            const TreeSpec spec = choice->tree_spec();
            LpFunction f = choice->alternating()
                               ? alternating_kernel(choice->m, choice->M, *depth, *cap)
                               : inductive_kernel(make_tree(spec), *depth, *cap);
            const auto sums_result = level_power_sums(f, Exponent::of(parse_p(*p_text)));
            if (*csv) {
                inv.emit_raw(to_csv_text(sums_result));
                return;
            }
            json params = choice->echo();
            params["depth"] = *depth;
            params["p"] = *p_text;
            wrapped(inv, "kernel sums", std::move(params), [&] { return to_json_text(sums_result); });
        });
    }

    {
        auto stretched = cmd->add_subcommand(
            "stretched", "divergent partial sums certifying the stretched-tree trivial kernel");
        auto M = std::make_shared<std::int64_t>(2);
        auto t_text = std::make_shared<std::string>("squares");
        auto p_text = std::make_shared<std::string>("2");
        auto J = std::make_shared<int>(8);
        stretched->add_option("--M", *M, "bifurcation child count")->required();
        stretched->add_option("--t", *t_text, "squares | selfpow | comma-separated prefix");
        stretched->add_option("--p", *p_text, "exponent >= 1");
        stretched->add_option("--J", *J, "number of partial sums");
        stretched->callback([&inv, M, t_text, p_text, J] {
            json params = {{"M", *M}, {"t", *t_text}, {"p", *p_text}, {"J", *J}};
            wrapped(inv, "kernel stretched", std::move(params), [&] {
                const auto sums =
                    stretched_partial_sums(*M, parse_t_sequence(*t_text), parse_p(*p_text), *J);
                json payload;
                payload["sums"] = sums;
                return payload.dump();
            });
        });
    }
}

void add_roots(CLI::App& app, Invocation& inv) {
    auto cmd = app.add_subcommand("roots", "isolate real roots of a family polynomial");
    auto poly_kind = std::make_shared<std::string>();
    auto n = std::make_shared<int>(2);
    auto coeffs = std::make_shared<std::string>();
    auto lo = std::make_shared<double>(-1.0);
    auto hi = std::make_shared<double>(1.0);
    auto tol = std::make_shared<double>(1e-12);
    cmd->add_option("--poly", *poly_kind, "kite | comb (or use --coeffs)");
    cmd->add_option("--n", *n, "family index");
    cmd->add_option("--coeffs", *coeffs, "comma-separated ascending integer coefficients");
    cmd->add_option("--lo", *lo, "open interval lower end");
    cmd->add_option("--hi", *hi, "open interval upper end");
    cmd->add_option("--tol", *tol, "bisection width");
    cmd->callback([&inv, poly_kind, n, coeffs, lo, hi, tol] {
        json params;
        if (!coeffs->empty())
            params["coeffs"] = *coeffs;
        else {
            params["poly"] = *poly_kind;
            params["n"] = *n;
        }
        params["lo"] = *lo;
        params["hi"] = *hi;
        params["tol"] = *tol;
        wrapped(inv, "roots", std::move(params), [&] {
            Polynomial poly;
            if (!coeffs->empty())
                poly = Polynomial::from_integers(parse_int_csv(*coeffs));
            else if (*poly_kind == "kite")
                poly = kite_polynomial(*n);
            else if (*poly_kind == "comb")
                poly = comb_polynomial(*n);
            else
                throw std::invalid_argument("roots needs --poly kite|comb or --coeffs");
            return roots_json(poly, roots_in_open_interval(poly, *lo, *hi, *tol));
        });
    });
}

void add_spectrum(CLI::App& app, Invocation& inv) {
    auto cmd = app.add_subcommand("spectrum", "full spectrum of a finite graph with an infinite tail");
    auto flags = std::make_shared<FamilyFlags>();
    auto depth = std::make_shared<int>(60);
    flags->attach(cmd, /*tail_only=*/true);
    cmd->add_option("--depth", *depth, "tail depth for eigenvector certification");
    cmd->callback([&inv, flags, depth] {
        json params = flags->echo();
        params["depth"] = *depth;
        wrapped(inv, "spectrum", std::move(params), [&] {
            return to_json_text(full_spectrum(flags->tail_kind(), flags->n, *depth));
        });
    });
}

void add_infinite_comb(CLI::App& app, Invocation& inv) {
    auto cmd = app.add_subcommand("infinite-comb", "spectrum of the infinite comb");
    auto lambda = std::make_shared<double>(0.0);
    auto* lambda_opt = cmd->add_option("--lambda", *lambda, "test membership of one point");
    cmd->callback([&inv, lambda, lambda_opt] {
        json params = json::object();
        if (*lambda_opt) params["lambda"] = *lambda;
        wrapped(inv, "infinite-comb", std::move(params), [&]() -> std::string {
            if (*lambda_opt) return membership_json(*lambda, infinite_comb_membership(*lambda));
            return to_json_text(infinite_comb_spectrum());
        });
    });
}

void add_tree_info(CLI::App& app, Invocation& inv) {
    auto cmd = app.add_subcommand("tree-info", "branching profile and kernel thresholds of a tree");
    auto spec_text = std::make_shared<std::string>();
    auto levels = std::make_shared<int>(8);
    cmd->add_option("--spec", *spec_text, "tree spec JSON")->required();
    cmd->add_option("--levels", *levels, "levels to report");
    cmd->callback([&inv, spec_text, levels] {
        const TreeSpec spec = parse_tree_spec(*spec_text);
        json params;
        params["spec"] = json::parse(tree_spec_to_json(spec));
        params["levels"] = *levels;
        wrapped(inv, "tree-info", std::move(params), [&] {
            json payload;
            payload["tree"] = tree_spec_name(spec);
            json beta = json::array();
            json gamma = json::array();
            double count = 1.0;
            for (int lvl = 0; lvl <= *levels; ++lvl) {
                beta.push_back(tree_beta_at_level(spec, lvl));
                gamma.push_back(count);
                count *= static_cast<double>(tree_beta_at_level(spec, lvl));
            }
            payload["beta_by_level"] = beta;
            payload["gamma_by_level"] = gamma;
            const auto bounds = branching_bounds(spec);
            payload["bounds"] = {{"m", bounds.essential_min},
                                 {"M", bounds.essential_max},
                                 {"N", bounds.exceptional_radius}};
            const double m = static_cast<double>(bounds.essential_min);
            const double M = static_cast<double>(bounds.essential_max);
            json thresholds;
            thresholds["trivial_up_to"] = M > 1.0 ? json(1.0 + std::log(m) / std::log(M)) : json();
            thresholds["nontrivial_above"] = m > 1.0 ? json(1.0 + std::log(M) / std::log(m)) : json();
            payload["thresholds"] = thresholds;
            return payload.dump();
        });
    });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"shift operator laboratory: norms, kernels, and spectra on infinite graphs"};
    app.require_subcommand(1);
    Invocation inv{out};

    add_gamma(app, inv);
    add_ratio(app, inv);
    add_norm(app, inv);
    add_witness(app, inv);
    add_kernel(app, inv);
    add_roots(app, inv);
    add_spectrum(app, inv);
    add_infinite_comb(app, inv);
    add_tree_info(app, inv);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const ResourceError& e) {
        err << "resource error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

}  // namespace shiftlab::cli
