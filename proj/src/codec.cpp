#include "elena/codec.hpp"

#include <cctype>
#include <sstream>

namespace elena {

namespace {

std::string_view trimmed(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

} // namespace

DyckPath parse_dyck(std::string_view text) {
    text = trimmed(text);
    std::vector<Step> steps;
    steps.reserve(text.size());
    // 0 = undecided, 1 = "UD", 2 = "()"
    int alphabet = 0;
    for (char ch : text) {
        int want;
        Step s;
        switch (ch) {
            case 'U': want = 1; s = Step::Up; break;
            case 'D': want = 1; s = Step::Down; break;
            case '(': want = 2; s = Step::Up; break;
            case ')': want = 2; s = Step::Down; break;
            default:
                throw BadAlphabet(std::string("unexpected character '") + ch + "'");
        }
        if (alphabet == 0) alphabet = want;
        if (alphabet != want) throw BadAlphabet("mixed UD and bracket alphabets");
        steps.push_back(s);
    }
    return DyckPath(std::move(steps)); // throws NonBalanced if invalid
}

std::string render_dyck(const DyckPath& p) {
    std::string out;
    out.reserve(p.length());
    for (Step s : p.steps()) out.push_back(s == Step::Up ? 'U' : 'D');
    return out;
}

namespace {

PlantedPlaneTree parse_tree_at(std::string_view text, std::size_t& pos) {
    if (pos >= text.size() || text[pos] != '(')
        throw NonBalanced("expected '('");
    ++pos;
    PlantedPlaneTree t;
    while (pos < text.size() && text[pos] == '(')
        t.children.push_back(parse_tree_at(text, pos));
    if (pos >= text.size() || text[pos] != ')')
        throw NonBalanced("expected ')'");
    ++pos;
    return t;
}

} // namespace

PlantedPlaneTree parse_tree(std::string_view text) {
    text = trimmed(text);
    std::size_t pos = 0;
    PlantedPlaneTree t = parse_tree_at(text, pos);
    if (pos != text.size())
        throw TrailingGarbage("unconsumed input after tree at offset " + std::to_string(pos));
    return t;
}

std::string render_tree(const PlantedPlaneTree& t) {
    std::string out = "(";
    for (const auto& c : t.children) out += render_tree(c);
    out += ")";
    return out;
}

ElenaWord parse_elena_word(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<std::string> tokens;
    for (std::string tok; in >> tok;) tokens.push_back(tok);

    if (tokens.empty()) throw GrammarViolation("empty word");
    if (tokens.back() != "a") throw GrammarViolation("word must end with a");

    ElenaWord w;
    bool in_block = false;
    for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
        const std::string& tok = tokens[i];
        if (tok == "a") {
            w.blocks.emplace_back();
            in_block = true;
        } else if (tok.size() >= 2 && tok[0] == 'p') {
            if (!in_block) throw GrammarViolation("p-token before the first a");
            long k = 0;
            for (std::size_t j = 1; j < tok.size(); ++j) {
                if (!std::isdigit(static_cast<unsigned char>(tok[j])))
                    throw BadToken("malformed token '" + tok + "'");
                k = k * 10 + (tok[j] - '0');
                if (k > 1'000'000) throw BadToken("path length out of range in '" + tok + "'");
            }
            if (k == 0) throw BadToken("path length must be >= 1 in '" + tok + "'");
            w.blocks.back().push_back(static_cast<int>(k));
        } else {
            throw BadToken("unknown token '" + tok + "'");
        }
    }
    return w;
}

std::string render_elena_word(const ElenaWord& w) {
    std::string out;
    for (const auto& block : w.blocks) {
        out += "a ";
        for (int m : block) out += "p" + std::to_string(m) + " ";
    }
    out += "a";
    return out;
}

std::string render_stat_record_json(const StatRecord& r) {
    std::ostringstream out;
    out << "{\"root_degree\":" << r.root_degree
        << ",\"leaves\":" << r.leaves
        << ",\"height\":" << r.height
        << ",\"psi\":" << r.psi
        << ",\"path_length\":" << r.path_length
        << ",\"paths\":" << r.paths
        << ",\"spine_nodes\":" << r.spine_nodes
        << ",\"path_nodes\":" << r.path_nodes << "}";
    return out.str();
}

} // namespace elena
