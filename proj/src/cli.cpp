#include "apofamily/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "apofamily/identities.hpp"
#include "apofamily/monomiality.hpp"

namespace apofamily {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const char* kUsage =
    "usage: apofamily <command> [flags]\n"
    "\n"
    "commands:\n"
    "  compute --family NAME --n N [family flags]   polynomial table for n = 0..N\n"
    "  gf      --family NAME --order N [flags]      generating-function coefficients\n"
    "  verify  --theorem ID [--trials T] [--seed S] [--order N] [--eps E] [--strict]\n"
    "  suite   (--all | --theorem ID) [--seed S] [--trials T] [--order N] [--strict]\n"
    "\n"
    "family flags: --k INT --A RAT --B RAT --alpha INT --m INT --r INT --lambda RAT\n"
    "families: unified-apostol uateghp teghabp teghaep teghagp tehp3v gould-hopper\n"
    "          trunc-exp tegh3v hermite2v\n"
    "theorems: expansion T3_1 T3_2 T3_3 T3_4 T4_1_odd T4_1_even T5_1..T5_6\n"
    "common flags: --format json|csv|text (default text), --output PATH, --eps RAT\n"
    "seed fallback: APOFAMILY_SEED environment variable\n";

struct Args {
    std::string command;
    std::map<std::string, std::string> values;
    std::set<std::string> switches;

    bool has(const std::string& k) const { return values.count(k) || switches.count(k); }
    std::string get(const std::string& k, const std::string& dflt) const {
        auto it = values.find(k);
        return it == values.end() ? dflt : it->second;
    }
    std::string require(const std::string& k) const {
        auto it = values.find(k);
        if (it == values.end()) throw UsageError("missing required flag --" + k);
        return it->second;
    }
    long get_long(const std::string& k, long dflt) const {
        auto it = values.find(k);
        if (it == values.end()) return dflt;
        try {
            return std::stol(it->second);
        } catch (const std::exception&) {
            throw UsageError("flag --" + k + " expects an integer, got '" + it->second + "'");
        }
    }
    Rational get_rational(const std::string& k, const Rational& dflt) const {
        auto it = values.find(k);
        if (it == values.end()) return dflt;
        try {
            return Rational::parse(it->second);
        } catch (const std::exception&) {
            throw UsageError("flag --" + k + " expects a rational, got '" + it->second + "'");
        }
    }
};

const std::set<std::string> kSwitchFlags = {"strict", "all", "help"};
const std::set<std::string> kValueFlags = {"family", "theorem", "n",      "order", "trials",
                                           "seed",   "format",  "eps",    "output", "k",
                                           "A",      "B",       "alpha",  "m",      "r",
                                           "lambda"};

Args parse_args(const std::vector<std::string>& argv) {
    Args args;
    if (argv.empty()) throw UsageError("no command given");
    args.command = argv[0];
    for (std::size_t i = 1; i < argv.size(); ++i) {
        const std::string& tok = argv[i];
        if (tok.rfind("--", 0) != 0) throw UsageError("unexpected argument '" + tok + "'");
        std::string name = tok.substr(2);
        std::string value;
        bool has_value = false;
        auto eq = name.find('=');
        if (eq != std::string::npos) {
            value = name.substr(eq + 1);
            name = name.substr(0, eq);
            has_value = true;
        }
        if (kSwitchFlags.count(name)) {
            if (has_value) throw UsageError("flag --" + name + " takes no value");
            args.switches.insert(name);
            continue;
        }
        if (!kValueFlags.count(name)) throw UsageError("unknown flag --" + name);
        if (!has_value) {
            if (i + 1 >= argv.size()) throw UsageError("flag --" + name + " expects a value");
            value = argv[++i];
        }
        args.values[name] = value;
    }
    return args;
}

std::string format_of(const Args& args) {
    std::string f = args.get("format", "text");
    if (f != "json" && f != "csv" && f != "text") throw UsageError("unknown format '" + f + "'");
    return f;
}

std::uint64_t seed_of(const Args& args) {
    if (args.values.count("seed")) {
        try {
            return std::stoull(args.values.at("seed"));
        } catch (const std::exception&) {
            throw UsageError("flag --seed expects an unsigned integer");
        }
    }
    if (const char* env = std::getenv("APOFAMILY_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw UsageError("APOFAMILY_SEED is not an unsigned integer");
        }
    }
    return 0;
}

FamilyParams family_params_of(const Args& args) {
    FamilyParams fp;
    fp.k = args.get_long("k", 1);
    fp.A = args.get_rational("A", Rational(1));
    fp.B = args.get_rational("B", Rational(1));
    fp.alpha = args.get_long("alpha", 1);
    fp.m = args.get_long("m", 2);
    fp.r = args.get_long("r", 2);
    return fp;
}

// ---- report rendering -----------------------------------------------------

json report_json(const VerificationReport& rep) {
    json j;
    j["theorem"] = theorem_name(rep.theorem);
    json p = json::object();
    for (const auto& [k, v] : rep.params) p[k] = v;
    j["params"] = p;
    j["order"] = rep.order;
    j["status"] = to_string(rep.status);
    j["oracle_status"] = to_string(rep.oracle_status);
    j["variant_notes"] = rep.variant_notes;
    if (rep.counterexample) {
        json ce;
        ce["n"] = rep.counterexample->n;
        ce["lhs"] = rep.counterexample->lhs;
        ce["rhs"] = rep.counterexample->rhs;
        ce["difference"] = rep.counterexample->difference;
        j["counterexample"] = ce;
    } else {
        j["counterexample"] = nullptr;
    }
    return j;
}

std::string join_kv(const std::vector<std::pair<std::string, std::string>>& kv) {
    std::string out;
    for (const auto& [k, v] : kv) {
        if (!out.empty()) out += ";";
        out += k + "=" + v;
    }
    return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += sep;
        out += p;
    }
    return out;
}

void emit_reports(const std::vector<VerificationReport>& reports, const std::string& fmt,
                  const std::string& command, bool with_summary, std::ostream& out) {
    std::map<std::string, std::map<std::string, long>> summary;
    for (const auto& r : reports) {
        auto& row = summary[theorem_name(r.theorem)];
        row[to_string(r.status)] += 1;
        row[to_string(r.oracle_status)] += 1;
    }

    if (fmt == "json") {
        json doc;
        doc["schema"] = "1";
        doc["command"] = command;
        json rs = json::array();
        for (const auto& r : reports) rs.push_back(report_json(r));
        doc["reports"] = rs;
        if (with_summary) {
            json s = json::object();
            for (const auto& [t, row] : summary) {
                json jr = json::object();
                for (const auto& [k, v] : row) jr[k] = v;
                s[t] = jr;
            }
            doc["summary"] = s;
        }
        out << doc.dump(2) << "\n";
    } else if (fmt == "csv") {
        out << "schema,theorem,order,status,oracle_status,params,counterexample_n,"
               "counterexample_lhs,counterexample_rhs,counterexample_difference,notes\n";
        for (const auto& r : reports) {
            out << "1," << theorem_name(r.theorem) << "," << r.order << "," << to_string(r.status)
                << "," << to_string(r.oracle_status) << "," << join_kv(r.params) << ",";
            if (r.counterexample)
                out << r.counterexample->n << "," << r.counterexample->lhs << ","
                    << r.counterexample->rhs << "," << r.counterexample->difference;
            else
                out << ",,,";
            out << "," << join(r.variant_notes, ";") << "\n";
        }
        if (with_summary) {
            out << "schema,theorem,counts\n";
            for (const auto& [t, row] : summary) {
                std::vector<std::string> parts;
                for (const auto& [k, v] : row) parts.push_back(k + "=" + std::to_string(v));
                out << "1," << t << "," << join(parts, ";") << "\n";
            }
        }
    } else {
        for (const auto& r : reports) {
            out << theorem_name(r.theorem) << " status=" << to_string(r.status)
                << " oracle=" << to_string(r.oracle_status) << " order=" << r.order << " params{"
                << join_kv(r.params) << "}\n";
            for (const auto& note : r.variant_notes) out << "  note: " << note << "\n";
            if (r.counterexample)
                out << "  counterexample: n=" << r.counterexample->n
                    << " lhs=" << r.counterexample->lhs << " rhs=" << r.counterexample->rhs
                    << " difference=" << r.counterexample->difference << "\n";
        }
        if (with_summary) {
            out << "summary:\n";
            for (const auto& [t, row] : summary) {
                out << "  " << t << ":";
                for (const auto& [k, v] : row) out << " " << k << "=" << v;
                out << "\n";
            }
        }
    }
}

// ---- commands ---------------------------------------------------------------

int cmd_compute(const Args& args, std::ostream& out) {
    std::string fam_name = args.require("family");
    auto id = family_from_name(fam_name);
    if (!id) throw UsageError("unknown family '" + fam_name + "'");
    long n_max = args.get_long("n", args.get_long("order", 8));
    if (n_max < 0) throw UsageError("--n must be >= 0");

    SpecialArgs sa;
    FamilyParams fp = family_params_of(args);
    sa.alpha = fp.alpha;
    sa.m = fp.m;
    sa.r = fp.r;
    sa.k = fp.k;
    sa.A = fp.A;
    sa.B = fp.B;
    Rational lambda = args.get_rational("lambda", Rational(1));

    std::vector<std::string> rows;
    for (long n = 0; n <= n_max; ++n) rows.push_back(reduce_special(*id, n, lambda, sa).to_string());

    std::string fmt = format_of(args);
    if (fmt == "json") {
        json doc;
        doc["schema"] = "1";
        doc["command"] = "compute";
        doc["family"] = fam_name;
        json rs = json::array();
        for (long n = 0; n <= n_max; ++n) {
            json row;
            row["n"] = n;
            row["polynomial"] = rows[static_cast<std::size_t>(n)];
            rs.push_back(row);
        }
        doc["rows"] = rs;
        out << doc.dump(2) << "\n";
    } else if (fmt == "csv") {
        out << "schema,family,n,polynomial\n";
        for (long n = 0; n <= n_max; ++n)
            out << "1," << fam_name << "," << n << "," << rows[static_cast<std::size_t>(n)] << "\n";
    } else {
        for (long n = 0; n <= n_max; ++n) out << n << "\t" << rows[static_cast<std::size_t>(n)] << "\n";
    }
    return 0;
}

int cmd_gf(const Args& args, std::ostream& out) {
    std::string fam_name = args.require("family");
    auto id = family_from_name(fam_name);
    if (!id) throw UsageError("unknown family '" + fam_name + "'");
    long order = args.get_long("order", 8);
    FamilyParams fp = family_params_of(args);
    Rational lambda = args.get_rational("lambda", Rational(1));

    LaurentSeries gf = [&]() {
        switch (*id) {
            case FamilyId::UATyTEGHP:
                return uateghp_gf(fp, order);
            case FamilyId::TEHP3V: {
                FamilyParams p = fp;
                p.m = p.r = 2;
                return uateghp_gf(p, order);
            }
            case FamilyId::TEGHABP:
            case FamilyId::TEGHAEP:
            case FamilyId::TEGHAGP:
                return uateghp_gf(special_params(*id, lambda, fp.alpha, fp.m, fp.r), order);
            case FamilyId::UnifiedApostolP:
                return apostol_prefactor(fp, order) *
                       LaurentSeries::exp_poly_arg(VarSet::xyz(),
                                                   {{MultiPoly::variable(VarSet::xyz(), "x"), 1}}, order);
            case FamilyId::GouldHopper: {
                FamilyParams p = fp;
                p.alpha = 0;
                LaurentSeries full = uateghp_gf(p, order);
                std::vector<MultiPoly> c;
                for (long n = full.offset(); n <= full.order(); ++n)
                    c.push_back(full.at(n).evaluate_partial({{"z", Rational(0)}}));
                return LaurentSeries(VarSet::xyz(), full.offset(), full.order(), std::move(c));
            }
            case FamilyId::TruncExp: {
                FamilyParams p = fp;
                p.alpha = 0;
                LaurentSeries full = uateghp_gf(p, order);
                std::vector<MultiPoly> c;
                for (long n = full.offset(); n <= full.order(); ++n)
                    c.push_back(full.at(n).evaluate_partial({{"y", Rational(0)}}));
                return LaurentSeries(VarSet::xyz(), full.offset(), full.order(), std::move(c));
            }
            case FamilyId::TEGH3V: {
                FamilyParams p = fp;
                p.alpha = 0;
                return uateghp_gf(p, order);
            }
            case FamilyId::Hermite2V: {
                FamilyParams p = fp;
                p.m = p.r = 2;
                LaurentSeries full = uateghp_gf(p, order);
                std::vector<MultiPoly> c;
                for (long n = full.offset(); n <= full.order(); ++n) {
                    MultiPoly q = full.at(n).substitute_affine("x", Rational(2), Rational(0));
                    c.push_back(q.evaluate_partial({{"y", Rational(-1)}, {"z", Rational(1)}}));
                }
                return LaurentSeries(VarSet::xyz(), full.offset(), full.order(), std::move(c));
            }
        }
        throw UsageError("unknown family");
    }();

    std::string fmt = format_of(args);
    if (fmt == "json") {
        json doc;
        doc["schema"] = "1";
        doc["command"] = "gf";
        doc["family"] = fam_name;
        json rs = json::array();
        for (long n = gf.offset(); n <= gf.order(); ++n) {
            json row;
            row["power"] = n;
            row["coefficient"] = gf.at(n).to_string();
            rs.push_back(row);
        }
        doc["rows"] = rs;
        out << doc.dump(2) << "\n";
    } else if (fmt == "csv") {
        out << "schema,family,power,coefficient\n";
        for (long n = gf.offset(); n <= gf.order(); ++n)
            out << "1," << fam_name << "," << n << "," << gf.at(n).to_string() << "\n";
    } else {
        for (long n = gf.offset(); n <= gf.order(); ++n)
            out << "t^" << n << "\t" << gf.at(n).to_string() << "\n";
    }
    return 0;
}

int reports_exit_code(const std::vector<VerificationReport>& reports, bool strict) {
    bool any_oracle_fail = false, any_deviation = false;
    for (const auto& r : reports) {
        any_oracle_fail |= r.oracle_status == OracleStatus::oracle_fail;
        any_deviation |= r.status == VerifyStatus::paper_deviation;
    }
    if (any_oracle_fail) return 1;
    if (strict && any_deviation) return 3;
    return 0;
}

int cmd_verify(const Args& args, std::ostream& out) {
    std::string tname = args.require("theorem");
    auto id = theorem_from_name(tname);
    if (!id) throw UsageError("unknown theorem '" + tname + "'");
    long trials = args.get_long("trials", 10);
    if (trials < 1) throw UsageError("--trials must be >= 1");
    std::uint64_t seed = seed_of(args);
    VerifyOptions opt;
    opt.order = args.get_long("order", 8);
    opt.eps = args.get_rational("eps", opt.eps);

    std::vector<VerificationReport> reports;
    for (long t = 0; t < trials; ++t) reports.push_back(run_trial(*id, seed, t, opt));
    emit_reports(reports, format_of(args), "verify", false, out);
    return reports_exit_code(reports, args.has("strict"));
}

int cmd_suite(const Args& args, std::ostream& out) {
    std::vector<TheoremId> which;
    if (args.has("all")) {
        which = all_theorems();
    } else {
        std::string tname = args.require("theorem");
        auto id = theorem_from_name(tname);
        if (!id) throw UsageError("unknown theorem '" + tname + "'");
        which = {*id};
    }
    long trials = args.get_long("trials", 10);
    if (trials < 1) throw UsageError("--trials must be >= 1");
    std::uint64_t seed = seed_of(args);
    VerifyOptions opt;
    opt.order = args.get_long("order", 8);
    opt.eps = args.get_rational("eps", opt.eps);

    std::vector<VerificationReport> reports;
    for (TheoremId id : which)
        for (long t = 0; t < trials; ++t) reports.push_back(run_trial(id, seed, t, opt));
    emit_reports(reports, format_of(args), "suite", true, out);
    return reports_exit_code(reports, args.has("strict"));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        Args parsed = parse_args(args);
        if (parsed.switches.count("help")) {
            out << kUsage;
            return 0;
        }

        std::ostringstream buffer;
        int code;
        if (parsed.command == "compute")
            code = cmd_compute(parsed, buffer);
        else if (parsed.command == "gf")
            code = cmd_gf(parsed, buffer);
        else if (parsed.command == "verify")
            code = cmd_verify(parsed, buffer);
        else if (parsed.command == "suite")
            code = cmd_suite(parsed, buffer);
        else
            throw UsageError("unknown command '" + parsed.command + "'");

        if (parsed.values.count("output")) {
            std::ofstream file(parsed.values.at("output"));
            if (!file) throw std::runtime_error("cannot open output file");
            file << buffer.str();
        } else {
            out << buffer.str();
        }
        return code;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n\n" << kUsage;
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace apofamily
