#include "plgroup/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "plgroup/serialization.hpp"

namespace plgroup::cli {

namespace {

// Option values are inline JSON when they look like it ('{', '[', '@file'
// forces a file read); otherwise they name a file.
json load_json(const std::string& arg) {
    std::string text;
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw ParseError("cannot open " + arg.substr(1));
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    } else if (!arg.empty() && (arg[0] == '{' || arg[0] == '[')) {
        text = arg;
    } else {
        std::ifstream in(arg);
        if (!in) throw ParseError("cannot open " + arg);
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON in " + arg);
    return j;
}

void emit(const json& j, const std::string& out_path, std::ostream& out) {
    std::string text = j.dump(2) + "\n";
    if (out_path.empty()) {
        out << text;
    } else {
        std::ofstream f(out_path);
        if (!f) throw ParseError("cannot write " + out_path);
        f << text;
    }
}

Interval single_interval(const json& j) {
    if (j.is_array() && j.size() == 1 && j[0].is_array()) return j[0].get<Interval>();
    return j.get<Interval>();
}

std::vector<Interval> interval_list(const json& j) {
    if (!j.is_array()) throw ParseError("intervals must be a JSON array");
    std::vector<Interval> out;
    for (const auto& e : j) out.push_back(e.get<Interval>());
    return out;
}

template <typename Map>
std::vector<Map> map_list(const json& j) {
    if (!j.is_array()) throw ParseError("adversaries must be a JSON array of maps");
    std::vector<Map> out;
    for (const auto& e : j) out.push_back(e.template get<Map>());
    return out;
}

HoelderExponent parse_exponent(const std::string& s) {
    Rational e = parse_rational(s);
    return HoelderExponent::checked(e.get_num().get_si(), e.get_den().get_si());
}

int verify_certificate(const json& cert, std::ostream& out) {
    std::string type = cert.at("type").get<std::string>();
    if (type == "escape-lip") {
        LipEscapeCertificate c = cert.get<LipEscapeCertificate>();
        LipEscapeCertificate again =
            verify_escape_lip(c.f, c.n, c.family, c.adversaries);
        if (json(again) != cert)
            throw CertificateFailure("stored witnesses disagree with recomputation");
    } else if (type == "escape-hoelder") {
        HoelderCertificate c = cert.get<HoelderCertificate>();
        HoelderCertificate again =
            verify_escape_hoelder(c.f, c.n, c.eps, c.family, c.adversaries);
        if (json(again) != cert)
            throw CertificateFailure("stored witnesses disagree with recomputation");
    } else {
        throw ParseError("unknown certificate type " + type);
    }
    out << "verified\n";
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact piecewise-linear interval homeomorphisms"};
    app.require_subcommand(1);

    std::string f_arg, g_arg, x_arg, out_path, intervals_arg, adversaries_arg;
    std::string epsilon_arg = "1/2", cert_arg;
    long n = 0;
    SampleConfig cfg;

    auto add_common = [&](CLI::App* c) {
        c->add_option("--out", out_path, "output file (stdout if omitted)");
    };

    auto* compose = app.add_subcommand("compose", "compose two maps (f after g)");
    compose->add_option("--f", f_arg)->required();
    compose->add_option("--g", g_arg)->required();
    add_common(compose);

    auto* invert = app.add_subcommand("invert", "invert a map");
    invert->add_option("--f", f_arg)->required();
    add_common(invert);

    auto* eval_cmd = app.add_subcommand("eval", "evaluate f at x");
    eval_cmd->add_option("--f", f_arg)->required();
    eval_cmd->add_option("--x", x_arg)->required();

    auto* slope = app.add_subcommand("slope-ratio", "right/left derivative ratio at x");
    slope->add_option("--f", f_arg)->required();
    slope->add_option("--x", x_arg)->required();

    auto* factor = app.add_subcommand("factor", "one-break factorization of f");
    factor->add_option("--f", f_arg)->required();
    add_common(factor);

    auto* validate = app.add_subcommand("validate", "check a break tuple");
    validate->add_option("--f", f_arg)->required();

    auto* sample = app.add_subcommand("sample-category", "break-count statistics for fg");
    sample->add_option("--f", f_arg)->required();
    sample->add_option("--n", n, "breaks of the random right factor")->required();
    sample->add_option("--seed", cfg.seed);
    sample->add_option("--trials", cfg.trials);
    sample->add_option("--denominator-bound", cfg.denominator_bound);
    add_common(sample);

    auto* elip = app.add_subcommand("escape-lip", "Lipschitz escape certificate");
    elip->add_option("--n", n)->required();
    elip->add_option("--intervals", intervals_arg)->required();
    elip->add_option("--adversaries", adversaries_arg)->required();
    add_common(elip);

    auto* ehoel = app.add_subcommand("escape-hoelder", "Hoelder escape certificate");
    ehoel->add_option("--n", n)->required();
    ehoel->add_option("--epsilon", epsilon_arg);
    ehoel->add_option("--intervals", intervals_arg)->required();
    ehoel->add_option("--adversaries", adversaries_arg)->required();
    add_common(ehoel);

    auto* vcert = app.add_subcommand("verify-cert", "recheck a certificate");
    vcert->add_option("--cert", cert_arg)->required();

    auto* bump_cmd = app.add_subcommand("bump", "bump map supported on an interval");
    bump_cmd->add_option("--intervals", intervals_arg)->required();
    add_common(bump_cmd);

    auto* witness = app.add_subcommand("witness", "non-commutation witness for f on W");
    witness->add_option("--f", f_arg)->required();
    witness->add_option("--intervals", intervals_arg)->required();
    add_common(witness);

    auto* embed = app.add_subcommand("embed", "extend an interval map to the line");
    embed->add_option("--f", f_arg)->required();
    add_common(embed);

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (*compose) {
            PLMap f = load_json(f_arg).get<PLMap>();
            PLMap g = load_json(g_arg).get<PLMap>();
            emit(json(plgroup::compose(f, g)), out_path, out);
        } else if (*invert) {
            emit(json(plgroup::invert(load_json(f_arg).get<PLMap>())), out_path, out);
        } else if (*eval_cmd) {
            PLMap f = load_json(f_arg).get<PLMap>();
            out << to_string(evaluate(f, parse_rational(x_arg))) << "\n";
        } else if (*slope) {
            PLMap f = load_json(f_arg).get<PLMap>();
            out << to_string(slope_ratio(f, parse_rational(x_arg))) << "\n";
        } else if (*factor) {
            emit(json(factor_one_break(load_json(f_arg).get<PLMap>())), out_path, out);
        } else if (*validate) {
            BreakTuple t = load_json(f_arg).get<BreakTuple>();
            if (!validate_tuple(t)) throw InvalidTuple("tuple fails the break conditions");
            out << "valid\n";
        } else if (*sample) {
            PLMap f = load_json(f_arg).get<PLMap>();
            emit(json(category_experiment(f, static_cast<std::size_t>(n), cfg)), out_path, out);
        } else if (*elip) {
            IntervalFamily J = IntervalFamily::checked(interval_list(load_json(intervals_arg)));
            auto adv = map_list<PLMap>(load_json(adversaries_arg));
            PLMap f = build_escape_lip(n, J, adv);
            emit(json(verify_escape_lip(f, n, J, adv)), out_path, out);
        } else if (*ehoel) {
            SeparatedFamily J = SeparatedFamily::checked(interval_list(load_json(intervals_arg)));
            auto adv = map_list<PQMap>(load_json(adversaries_arg));
            HoelderExponent eps = parse_exponent(epsilon_arg);
            PQMap f = build_escape_hoelder(n, eps, J, adv);
            emit(json(verify_escape_hoelder(f, n, eps, J, adv)), out_path, out);
        } else if (*vcert) {
            return verify_certificate(load_json(cert_arg), out);
        } else if (*bump_cmd) {
            emit(json(bump(single_interval(load_json(intervals_arg)))), out_path, out);
        } else if (*witness) {
            PLMap f = load_json(f_arg).get<PLMap>();
            Interval W = single_interval(load_json(intervals_arg));
            auto w = noncommute_witness(f, W);
            emit(w ? json(*w) : json(nullptr), out_path, out);
        } else if (*embed) {
            emit(json(embed_interval(load_json(f_arg).get<PLMap>())), out_path, out);
        }
    } catch (const Error& e) {
        err << e.what() << "\n";  // what() already carries the error name
        return 1;
    } catch (const json::exception& e) {
        err << "ParseError: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace plgroup::cli
