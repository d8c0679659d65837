#include "bfv/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace bfv {

namespace {

struct Line {
    int number = 0;
    std::string key;
    std::string value;
};

std::string trim(const std::string& s) {
    const char* ws = " \t\r";
    auto b = s.find_first_not_of(ws);
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string t; in >> t;) out.push_back(t);
    return out;
}

std::vector<Line> lex(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::string s = trim(raw);
        if (s.empty()) continue;
        auto colon = s.find(':');
        if (colon == std::string::npos) throw ParseError(number, "expected 'key: value'");
        out.push_back(Line{number, trim(s.substr(0, colon)), trim(s.substr(colon + 1))});
    }
    return out;
}

Weight parse_int(int line, const std::string& token, const std::string& what) {
    Weight v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw ParseError(line, what + " '" + token + "' is not an integer");
    if (v < 0) throw ParseError(line, what + " must be nonnegative");
    return v;
}

std::vector<Weight> parse_ints(int line, const std::string& value, const std::string& what) {
    std::vector<Weight> out;
    for (const auto& t : split_ws(value)) out.push_back(parse_int(line, t, what));
    return out;
}

ElectionKind parse_kind(int line, const std::string& value) {
    if (value == "bucklin") return ElectionKind::Bucklin;
    if (value == "fallback") return ElectionKind::Fallback;
    throw ParseError(line, "kind must be 'bucklin' or 'fallback'");
}

std::string kind_keyword(ElectionKind kind) { return kind == ElectionKind::Bucklin ? "bucklin" : "fallback"; }

class VoteParser {
public:
    VoteParser(ElectionKind kind, const std::vector<std::string>& names) : kind_(kind), m_(static_cast<int>(names.size())) {
        for (std::size_t i = 0; i < names.size(); ++i) ids_[names[i]] = static_cast<CandidateId>(i);
    }

    Voter parse(int line, const std::string& value) const {
        std::string spaced;
        for (char ch : value) {
            if (ch == '>' || ch == '|') {
                spaced += ' ';
                spaced += ch;
                spaced += ' ';
            } else {
                spaced += ch;
            }
        }
        auto tokens = split_ws(spaced);
        Voter voter;
        std::size_t i = 0;
        bool expect_name = true;
        bool bar = false;
        std::vector<char> tail(static_cast<std::size_t>(m_), 0);
        for (; i < tokens.size(); ++i) {
            const auto& t = tokens[i];
            if (t.find('=') != std::string::npos) break;
            if (t == ">") {
                if (expect_name || bar) throw ParseError(line, "misplaced '>'");
                expect_name = true;
            } else if (t == "|") {
                if (kind_ == ElectionKind::Bucklin) throw ParseError(line, "'|' appears in a Bucklin ballot");
                if (bar || (expect_name && !voter.ballot.ranking.empty())) throw ParseError(line, "misplaced '|'");
                bar = true;
            } else {
                CandidateId c = id(line, t);
                if (bar) {
                    if (voter.ballot.approves(c) || tail[static_cast<std::size_t>(c)])
                        throw ParseError(line, "candidate '" + t + "' listed twice");
                    tail[static_cast<std::size_t>(c)] = 1;
                    continue;
                }
                if (!expect_name) throw ParseError(line, "expected '>' before '" + t + "'");
                voter.ballot.ranking.push_back(c);
                expect_name = false;
            }
        }
        if (expect_name && !voter.ballot.ranking.empty() && !bar) throw ParseError(line, "ballot ends with '>'");
        bool seen_weight = false;
        bool seen_price = false;
        for (; i < tokens.size(); ++i) {
            const auto& t = tokens[i];
            auto eq = t.find('=');
            if (eq == std::string::npos) throw ParseError(line, "unexpected '" + t + "' after attributes");
            std::string key = t.substr(0, eq);
            Weight v = parse_int(line, t.substr(eq + 1), key);
            if (key == "weight" && !seen_weight) {
                voter.weight = v;
                seen_weight = true;
            } else if (key == "price" && !seen_price) {
                voter.price = v;
                seen_price = true;
            } else {
                throw ParseError(line, "unknown or repeated attribute '" + key + "'");
            }
        }
        try {
            validate_ballot(kind_, m_, voter.ballot);
        } catch (const InvalidInput& e) {
            throw ParseError(line, e.what());
        }
        return voter;
    }

    CandidateId id(int line, const std::string& name) const {
        auto it = ids_.find(name);
        if (it == ids_.end()) throw ParseError(line, "unknown candidate '" + name + "'");
        return it->second;
    }

private:
    ElectionKind kind_;
    int m_;
    std::map<std::string, CandidateId> ids_;
};

struct RawDocument {
    std::optional<ElectionKind> kind;
    std::optional<std::vector<std::string>> names;
    int names_line = 0;
    std::vector<Voter> voters;
    std::optional<std::string> problem;
    int problem_line = 0;
    std::optional<std::string> designated;
    int designated_line = 0;
    std::optional<std::vector<Weight>> manipulators;
    int manipulators_line = 0;
    std::optional<Weight> budget;
    int budget_line = 0;
    std::vector<std::pair<int, std::string>> swap_lines;
    std::vector<std::pair<int, std::string>> extension_lines;
    Election election;
    int end_line = 1;
};

void set_once(bool already, int line, const std::string& key) {
    if (already) throw ParseError(line, "'" + key + "' given twice");
}

RawDocument read_document(const std::string& text, bool allow_instance_keys) {
    RawDocument doc;
    std::optional<VoteParser> votes;
    int last_line = 0;
    for (const auto& l : lex(text)) {
        last_line = l.number;
        if (l.key == "kind") {
            set_once(doc.kind.has_value(), l.number, l.key);
            doc.kind = parse_kind(l.number, l.value);
        } else if (l.key == "candidates") {
            set_once(doc.names.has_value(), l.number, l.key);
            doc.names = split_ws(l.value);
            doc.names_line = l.number;
            for (const auto& n : *doc.names)
                if (n.find_first_of("=>|") != std::string::npos)
                    throw ParseError(l.number, "candidate name '" + n + "' uses a reserved character");
        } else if (l.key == "vote") {
            if (!doc.kind || !doc.names) throw ParseError(l.number, "'kind' and 'candidates' must precede votes");
            if (!votes) votes.emplace(*doc.kind, *doc.names);
            doc.voters.push_back(votes->parse(l.number, l.value));
        } else if (allow_instance_keys && l.key == "problem") {
            set_once(doc.problem.has_value(), l.number, l.key);
            doc.problem = l.value;
            doc.problem_line = l.number;
        } else if (allow_instance_keys && l.key == "designated") {
            set_once(doc.designated.has_value(), l.number, l.key);
            doc.designated = l.value;
            doc.designated_line = l.number;
        } else if (allow_instance_keys && l.key == "manipulators") {
            set_once(doc.manipulators.has_value(), l.number, l.key);
            doc.manipulators = parse_ints(l.number, l.value, "manipulator weight");
            doc.manipulators_line = l.number;
        } else if (allow_instance_keys && l.key == "budget") {
            set_once(doc.budget.has_value(), l.number, l.key);
            doc.budget = parse_int(l.number, l.value, "budget");
            doc.budget_line = l.number;
        } else if (allow_instance_keys && l.key == "swap-prices") {
            doc.swap_lines.emplace_back(l.number, l.value);
        } else if (allow_instance_keys && l.key == "extension-prices") {
            doc.extension_lines.emplace_back(l.number, l.value);
        } else {
            throw ParseError(l.number, "unknown key '" + l.key + "'");
        }
    }
    doc.end_line = last_line + 1;
    if (!doc.kind) throw ParseError(last_line + 1, "missing 'kind'");
    if (!doc.names) throw ParseError(last_line + 1, "missing 'candidates'");
    try {
        doc.election = Election(*doc.kind, *doc.names, doc.voters);
    } catch (const InvalidInput& e) {
        throw ParseError(doc.names_line, e.what());
    }
    return doc;
}

struct TagInfo {
    int family = 0;  // 0 manipulation, 1 bribery, 2 campaign
    Goal goal = Goal::Constructive;
    bool weighted = false;
    bool priced = false;
    bool coalitional = false;
    CampaignProblem campaign = CampaignProblem::CUEB;
};

std::optional<TagInfo> tag_info(const std::string& tag) {
    static const std::map<std::string, TagInfo> table = [] {
        std::map<std::string, TagInfo> t;
        for (std::string g : {"C", "D"}) {
            Goal goal = g == "C" ? Goal::Constructive : Goal::Destructive;
            for (std::string w : {"U", "W"}) {
                bool weighted = w == "W";
                t[g + "C" + w + "M"] = TagInfo{0, goal, weighted, false, true, {}};
                t[g + w + "M"] = TagInfo{0, goal, weighted, false, false, {}};
                t[g + w + "B"] = TagInfo{1, goal, weighted, false, false, {}};
                t[g + w + "B$"] = TagInfo{1, goal, weighted, true, false, {}};
            }
        }
        for (auto p : {CampaignProblem::CUSB, CampaignProblem::DUSB, CampaignProblem::CWSB, CampaignProblem::DWSB,
                       CampaignProblem::CUEB, CampaignProblem::DUEB, CampaignProblem::CWEB, CampaignProblem::DWEB})
            t[to_string(p)] = TagInfo{2, goal_of(p), is_weighted(p), false, false, p};
        return t;
    }();
    auto it = table.find(tag);
    if (it == table.end()) return std::nullopt;
    return it->second;
}

void forbid(bool present, int line, const std::string& what, const std::string& tag) {
    if (present) throw ParseError(line, "'" + what + "' does not apply to " + tag);
}

void forbid_prices(const RawDocument& doc, const std::string& tag) {
    if (!doc.swap_lines.empty()) forbid(true, doc.swap_lines[0].first, "swap-prices", tag);
    if (!doc.extension_lines.empty()) forbid(true, doc.extension_lines[0].first, "extension-prices", tag);
}

void require_unit_weights(const Election& e, int line, const std::string& tag) {
    for (const auto& v : e.voters())
        if (v.weight != 1) throw ParseError(line, tag + " requires unit voter weights");
}

std::string join(const std::vector<Weight>& xs, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(xs[i]);
    }
    return out;
}

}  // namespace

Election parse_election(const std::string& text, bool allow_instance_keys) {
    return read_document(text, allow_instance_keys).election;
}

std::string serialize_election(const Election& election) {
    std::string out = "kind: " + kind_keyword(election.kind()) + "\ncandidates:";
    for (const auto& n : election.candidates()) out += " " + n;
    out += "\n";
    for (const auto& v : election.voters()) {
        out += "vote: " + format_ballot(election, v.ballot);
        if (v.weight != 1) out += " weight=" + std::to_string(v.weight);
        if (v.price != 1) out += " price=" + std::to_string(v.price);
        out += "\n";
    }
    return out;
}

InstanceDocument parse_instance(const std::string& text) {
    RawDocument doc = read_document(text, true);
    if (!doc.problem) throw ParseError(doc.end_line, "missing 'problem'");
    const std::string tag = *doc.problem;
    auto info = tag_info(tag);
    if (!info) throw ParseError(doc.problem_line, "unknown problem '" + tag + "'");
    if (!doc.designated) throw ParseError(doc.problem_line, "missing 'designated'");
    auto designated = doc.election.find(*doc.designated);
    if (!designated) throw ParseError(doc.designated_line, "unknown candidate '" + *doc.designated + "'");
    const Election& e = doc.election;
    const auto n = static_cast<std::size_t>(e.num_voters());

    if (!info->weighted) require_unit_weights(e, doc.problem_line, tag);

    if (info->family == 0) {
        forbid(doc.budget.has_value(), doc.budget_line, "budget", tag);
        forbid_prices(doc, tag);
        if (!doc.manipulators) throw ParseError(doc.problem_line, tag + " needs 'manipulators'");
        const auto& w = *doc.manipulators;
        if (w.empty()) throw ParseError(doc.manipulators_line, "at least one manipulator is required");
        if (!info->coalitional && w.size() != 1)
            throw ParseError(doc.manipulators_line, tag + " has exactly one manipulator");
        if (!info->weighted)
            for (Weight x : w)
                if (x != 1) throw ParseError(doc.manipulators_line, tag + " requires unit manipulator weights");
        return InstanceDocument{tag, ManipulationInstance{e, w, *designated, info->goal}};
    }

    forbid(doc.manipulators.has_value(), doc.manipulators_line, "manipulators", tag);
    if (!doc.budget) throw ParseError(doc.problem_line, tag + " needs 'budget'");

    if (info->family == 1) {
        forbid_prices(doc, tag);
        BriberyInstance b{e, *designated, *doc.budget, info->weighted, info->priced, info->goal};
        try {
            b.validate();
        } catch (const InvalidInput& ex) {
            throw ParseError(doc.problem_line, ex.what());
        }
        return InstanceDocument{tag, b};
    }

    CampaignInstance c;
    c.election = e;
    c.designated = *designated;
    c.budget = *doc.budget;
    c.problem = info->campaign;
    const int m = e.num_candidates();
    if (is_swap_problem(c.problem)) {
        forbid(!doc.extension_lines.empty(), doc.extension_lines.empty() ? 0 : doc.extension_lines[0].first,
               "extension-prices", tag);
        if (doc.swap_lines.size() != n)
            throw ParseError(doc.problem_line, tag + " needs one 'swap-prices' line per voter");
        for (const auto& [line, value] : doc.swap_lines) {
            std::vector<Weight> data;
            std::stringstream rows(value);
            int row_count = 0;
            for (std::string row; std::getline(rows, row, ';'); ++row_count) {
                auto r = parse_ints(line, row, "swap price");
                if (static_cast<int>(r.size()) != m) throw ParseError(line, "each swap price row needs m entries");
                data.insert(data.end(), r.begin(), r.end());
            }
            if (row_count != m) throw ParseError(line, "swap prices need m rows separated by ';'");
            c.swap_prices.emplace_back(m, std::move(data));
        }
    } else {
        forbid(!doc.swap_lines.empty(), doc.swap_lines.empty() ? 0 : doc.swap_lines[0].first, "swap-prices", tag);
        if (doc.extension_lines.size() != n)
            throw ParseError(doc.problem_line, tag + " needs one 'extension-prices' line per voter");
        for (const auto& [line, value] : doc.extension_lines)
            c.extension_prices.push_back(ExtensionPriceFunction{parse_ints(line, value, "extension price")});
    }
    try {
        c.validate();
    } catch (const InvalidInput& ex) {
        throw ParseError(doc.problem_line, ex.what());
    }
    return InstanceDocument{tag, c};
}

std::string serialize_instance(const InstanceDocument& document) {
    return std::visit(
        [&](const auto& inst) {
            using T = std::decay_t<decltype(inst)>;
            const Election& e = inst.election;
            std::string out = "problem: " + document.problem + "\ndesignated: " + e.name(inst.designated) + "\n";
            out += serialize_election(e);
            if constexpr (std::is_same_v<T, ManipulationInstance>) {
                out += "manipulators: " + join(inst.manipulator_weights, " ") + "\n";
            } else {
                out += "budget: " + std::to_string(inst.budget) + "\n";
            }
            if constexpr (std::is_same_v<T, CampaignInstance>) {
                const int m = e.num_candidates();
                for (const auto& f : inst.swap_prices) {
                    out += "swap-prices:";
                    for (int r = 0; r < m; ++r) {
                        if (r) out += " ;";
                        for (int col = 0; col < m; ++col) out += " " + std::to_string(f(r, col));
                    }
                    out += "\n";
                }
                for (const auto& f : inst.extension_prices) out += "extension-prices: " + join(f.costs, " ") + "\n";
            }
            return out;
        },
        document.instance);
}

InstanceDocument make_document(const ManipulationInstance& instance) {
    std::string tag = instance.goal == Goal::Constructive ? "C" : "D";
    if (instance.manipulator_weights.size() != 1) tag += "C";
    tag += instance.unweighted() ? "UM" : "WM";
    return InstanceDocument{tag, instance};
}

InstanceDocument make_document(const BriberyInstance& instance) {
    std::string tag = instance.goal == Goal::Constructive ? "C" : "D";
    tag += instance.weighted ? "WB" : "UB";
    if (instance.priced) tag += "$";
    return InstanceDocument{tag, instance};
}

InstanceDocument make_document(const CampaignInstance& instance) {
    return InstanceDocument{to_string(instance.problem), instance};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInput("cannot write '" + path + "'");
    out << text;
}

}  // namespace bfv
