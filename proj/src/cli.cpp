#include "bfv/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

#include "bfv/bribery.hpp"
#include "bfv/campaign.hpp"
#include "bfv/io.hpp"
#include "bfv/manipulation.hpp"
#include "bfv/reductions.hpp"

namespace bfv {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, sep);) out.push_back(item);
    return out;
}

Weight to_int(const std::string& token) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(token, &used);
    } catch (const std::exception&) {
        throw InvalidInput("'" + token + "' is not an integer");
    }
    if (used != token.size()) throw InvalidInput("'" + token + "' is not an integer");
    return v;
}

void print_table(const Election& e, std::ostream& out) {
    const auto t = level_scores(e);
    std::size_t width = 5;
    for (const auto& n : e.candidates()) width = std::max(width, n.size());
    for (CandidateId c = 0; c < e.num_candidates(); ++c)
        width = std::max(width, std::to_string(t.total(c)).size());
    out << std::left << std::setw(static_cast<int>(width)) << "level";
    for (const auto& n : e.candidates()) out << "  " << std::right << std::setw(static_cast<int>(width)) << n;
    out << "\n";
    for (int level = 1; level <= e.num_candidates(); ++level) {
        out << std::left << std::setw(static_cast<int>(width)) << level;
        for (CandidateId c = 0; c < e.num_candidates(); ++c)
            out << "  " << std::right << std::setw(static_cast<int>(width)) << t.score(c, level);
        out << "\n";
    }
}

int cmd_winners(const std::string& path, std::ostream& out) {
    Election e = parse_election(read_file(path), true);
    auto r = winners(e);
    out << "maj: " << majority_threshold_for(e.total_weight()) << "\n";
    out << "winners: " << format_winners(e, r) << "\n";
    print_table(e, out);
    return 0;
}

void print_certificate(const ManipulationInstance& inst, const ManipulationCertificate& cert, std::ostream& out) {
    const Election combined = combined_election(inst, cert.ballots);
    for (std::size_t i = 0; i < cert.ballots.size(); ++i)
        out << "manipulator " << i + 1 << ": " << format_ballot(combined, cert.ballots[i]) << "\n";
    out << "winners: " << format_winners(combined, cert.achieved) << "\n";
}

void print_certificate(const BriberyInstance& inst, const BriberyCertificate& cert, std::ostream& out) {
    for (std::size_t i = 0; i < cert.bribed.size(); ++i)
        out << "bribed voter " << cert.bribed[i] + 1 << ": " << format_ballot(inst.election, cert.replacements[i])
            << "\n";
    out << "winners: " << format_winners(inst.election, cert.achieved) << "\n";
}

void print_certificate(const CampaignInstance& inst, const CampaignCertificate& cert, std::ostream& out) {
    const Election& e = inst.election;
    for (std::size_t i = 0; i < cert.changed.size(); ++i) {
        out << "changed voter " << cert.changed[i] + 1 << ": " << format_ballot(e, cert.new_ballots[i]) << "\n";
        if (i < cert.swaps.size()) {
            out << "  swaps:";
            for (const auto& [x, y] : cert.swaps[i]) out << " " << e.name(x) << "/" << e.name(y);
            out << "\n";
        }
    }
    out << "cost: " << cert.cost << "\n";
    out << "winners: " << format_winners(e, cert.achieved) << "\n";
}

int cmd_solve(const std::string& path, bool oracle, bool certificate, const std::string& guard, std::ostream& out) {
    InstanceDocument doc = parse_instance(read_file(path));
    OracleOptions options;
    if (!guard.empty()) options.guard = DeskScaleGuard::parse(guard);
    return std::visit(
        [&](const auto& inst) {
            using T = std::decay_t<decltype(inst)>;
            auto answer = [&] {
                if constexpr (std::is_same_v<T, ManipulationInstance>)
                    return oracle ? brute_manipulation(inst, options) : solve_manipulation(inst, options);
                else if constexpr (std::is_same_v<T, BriberyInstance>)
                    return oracle ? brute_bribery(inst, options) : solve_bribery(inst, options);
                else
                    return oracle ? brute_campaign(inst, options) : solve_campaign(inst, options);
            }();
            out << (answer ? "YES" : "NO") << "\n";
            if (answer && certificate) print_certificate(inst, *answer, out);
            return answer ? kYes : kNo;
        },
        doc.instance);
}

PartitionInstance partition_args(const std::vector<std::string>& args) {
    PartitionInstance p;
    for (const auto& a : args) p.values.push_back(to_int(a));
    return p;
}

X3CInstance x3c_args(const std::vector<std::string>& args) {
    if (args.empty()) throw InvalidInput("X3C needs m followed by triples such as 1,2,3");
    X3CInstance x;
    x.m = static_cast<int>(to_int(args[0]));
    for (std::size_t i = 1; i < args.size(); ++i) {
        auto parts = split(args[i], ',');
        if (parts.size() != 3) throw InvalidInput("X3C set '" + args[i] + "' needs three elements");
        x.sets.push_back({static_cast<int>(to_int(parts[0])), static_cast<int>(to_int(parts[1])),
                          static_cast<int>(to_int(parts[2]))});
    }
    return x;
}

// ranking p position budget matrix, the matrix rows and columns following
// the ranking.
SingleVoteSwapInstance single_vote_args(const std::vector<std::string>& args) {
    if (args.size() != 5)
        throw InvalidInput("single-vote source needs: ranking designated position budget matrix");
    SingleVoteSwapInstance s;
    s.candidates = split(args[0], ',');
    const int m = static_cast<int>(s.candidates.size());
    for (int i = 0; i < m; ++i) s.vote.push_back(i);
    auto at = std::find(s.candidates.begin(), s.candidates.end(), args[1]);
    if (at == s.candidates.end()) throw InvalidInput("designated '" + args[1] + "' is not in the ranking");
    s.designated = static_cast<CandidateId>(at - s.candidates.begin());
    s.position = static_cast<int>(to_int(args[2]));
    s.budget = to_int(args[3]);
    std::vector<Weight> data;
    auto rows = split(args[4], ';');
    if (static_cast<int>(rows.size()) != m) throw InvalidInput("swap matrix needs one row per candidate");
    for (const auto& row : rows) {
        auto cells = split(row, ',');
        if (static_cast<int>(cells.size()) != m) throw InvalidInput("swap matrix rows need one entry per candidate");
        for (const auto& cell : cells) data.push_back(to_int(cell));
    }
    s.prices = SwapPriceFunction(m, std::move(data));
    return s;
}

int cmd_generate(const std::string& tag, const std::vector<std::string>& args, const std::string& output,
                 std::ostream& out) {
    InstanceDocument doc;
    bool source = false;
    if (tag == "ccwm-partition") {
        auto p = partition_args(args);
        doc = make_document(gen_ccwm_from_partition(p));
        source = partition_has_solution(p);
    } else if (tag == "dwb$-partition" || tag == "dwb$-fallback-partition") {
        auto p = partition_args(args);
        auto kind = tag == "dwb$-partition" ? ElectionKind::Bucklin : ElectionKind::Fallback;
        doc = make_document(gen_dwb_priced(p, kind));
        source = partition_has_solution(p);
    } else if (tag == "cweb-partition" || tag == "dweb-partition") {
        auto p = partition_args(args);
        doc = make_document(
            gen_cweb_from_partition(p, tag == "cweb-partition" ? Goal::Constructive : Goal::Destructive));
        source = partition_has_solution(p);
    } else if (tag == "cub-x3c" || tag == "cub-fallback-x3c") {
        auto x = x3c_args(args);
        doc = make_document(tag == "cub-x3c" ? gen_cub_bucklin_from_x3c(x) : gen_cub_fallback_from_x3c(x));
        source = x3c_has_cover(x);
    } else if (tag == "cusb-single-vote" || tag == "dusb-single-vote") {
        auto s = single_vote_args(args);
        doc = make_document(
            gen_cusb_from_single_vote(s, tag == "cusb-single-vote" ? Goal::Constructive : Goal::Destructive));
        source = single_vote_has_solution(s);
    } else {
        throw InvalidInput("unknown generator '" + tag + "'");
    }
    const std::string text = serialize_instance(doc);
    out << "source: " << (source ? "YES" : "NO") << "\n";
    if (output.empty())
        out << text;
    else
        write_file(output, text);
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bucklin and fallback voting: winners, attacks and reductions", "bfv"};
    app.require_subcommand(1);

    std::string path;
    auto* winners_cmd = app.add_subcommand("winners", "Winners and level scores of an election file");
    winners_cmd->add_option("path", path, "Election file")->required();

    bool oracle = false;
    bool certificate = false;
    std::string guard;
    auto* solve_cmd = app.add_subcommand("solve", "Decide an instance file (exit 0 YES, 1 NO, 3 refused)");
    solve_cmd->add_option("path", path, "Instance file")->required();
    solve_cmd->add_flag("--oracle", oracle, "Use exhaustive search");
    solve_cmd->add_flag("--certificate", certificate, "Print the witness");
    solve_cmd->add_option("--guard", guard, "Oracle caps, e.g. m=5,n=6,budget=4,weight=100,ceiling=1e9");

    std::string tag;
    std::vector<std::string> source_args;
    std::string output;
    auto* gen_cmd = app.add_subcommand("generate", "Build an instance from a source problem");
    gen_cmd->add_option("tag", tag, "Generator")->required();
    gen_cmd->add_option("args", source_args, "Source instance");
    gen_cmd->add_option("-o,--output", output, "Output file");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : kInputError;
    }

    try {
        if (*winners_cmd) return cmd_winners(path, out);
        if (*solve_cmd) return cmd_solve(path, oracle, certificate, guard, out);
        return cmd_generate(tag, source_args, output, out);
    } catch (const OracleRefused& e) {
        err << "oracle refused (" << e.cap() << "): " << e.what() << "\n";
        return kRefused;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
}

}  // namespace bfv
