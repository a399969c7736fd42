#include "focalforge/ingredients.hpp"

#include "focalforge/java_lexer.hpp"
#include "focalforge/parallel.hpp"

#include <algorithm>
#include <ostream>

namespace focalforge {

std::vector<std::string> code_token_sequence(std::string_view code) {
    std::vector<std::string> out;
    for (auto& t : lex_java(code, LexMode::Permissive)) {
        switch (t.kind) {
            case TokenKind::Identifier:
            case TokenKind::IntegerLiteral:
            case TokenKind::FloatingLiteral:
            case TokenKind::CharLiteral:
            case TokenKind::StringLiteral:
            case TokenKind::TextBlock:
                out.push_back(std::move(t.text));
                break;
            default:
                break;
        }
    }
    return out;
}

TokenBag code_tokens(std::string_view code) {
    auto seq = code_token_sequence(code);
    return TokenBag(std::make_move_iterator(seq.begin()), std::make_move_iterator(seq.end()));
}

std::size_t shared_token_count(std::string_view a, std::string_view b, OverlapMode mode) {
    if (mode == OverlapMode::Set) {
        auto x = code_tokens(a);
        auto y = code_tokens(b);
        std::size_t n = 0;
        for (const auto& t : x) n += y.count(t);
        return n;
    }
    std::map<std::string, std::size_t> ca, cb;
    for (auto& t : code_token_sequence(a)) ++ca[t];
    for (auto& t : code_token_sequence(b)) ++cb[t];
    std::size_t n = 0;
    for (const auto& [tok, k] : ca) {
        if (auto it = cb.find(tok); it != cb.end()) n += std::min(k, it->second);
    }
    return n;
}

std::size_t shared_token_count(const ContextRendering& context, const MethodModel& test, OverlapMode mode) {
    return shared_token_count(context.text, test.body_text, mode);
}

OverlapStats overlap_distribution(const std::vector<MappedPair>& pairs, const std::vector<ContextLevel>& levels,
                                  const OverlapOptions& options) {
    OverlapStats stats;
    stats.levels = levels;
    const std::size_t n = pairs.size();
    std::vector<std::size_t> counts(n * levels.size());
    parallel_for(n, options.jobs, [&](std::size_t i) {
        for (std::size_t l = 0; l < levels.size(); ++l) {
            std::string text = options.truncate ? render_context(pairs[i], levels[l], options.budget).text
                                                : full_context_text(pairs[i], levels[l]);
            counts[l * n + i] = shared_token_count(text, pairs[i].test_case.body_text, options.mode);
        }
    });
    for (std::size_t l = 0; l < levels.size(); ++l) {
        std::vector<double> sample;
        sample.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            stats.rows.push_back({levels[l], pairs[i].pair_id, counts[l * n + i]});
            sample.push_back(static_cast<double>(counts[l * n + i]));
        }
        stats.per_level[levels[l]] = summarize(std::move(sample));
    }
    return stats;
}

nlohmann::json OverlapStats::to_json() const {
    nlohmann::json per = nlohmann::json::object();
    for (auto level : levels) {
        nlohmann::json s = per_level.at(level);
        nlohmann::json dist = nlohmann::json::object();
        std::map<std::size_t, std::size_t> histogram;
        for (const auto& r : rows) {
            if (r.level == level) ++histogram[r.shared_tokens];
        }
        for (const auto& [k, v] : histogram) dist[std::to_string(k)] = v;
        s["histogram"] = dist;
        per[std::string(level_id(level))] = s;
    }
    nlohmann::json ids = nlohmann::json::array();
    for (auto level : levels) ids.push_back(level_id(level));
    return {{"levels", ids}, {"per_level", per}};
}

void OverlapStats::write_csv(std::ostream& out) const {
    out << "level,pair_id,shared_tokens\n";
    for (const auto& r : rows) {
        std::string id = r.pair_id;
        if (id.find_first_of(",\"\n") != std::string::npos) {
            std::string quoted = "\"";
            for (char c : id) {
                if (c == '"') quoted += '"';
                quoted += c;
            }
            id = quoted + "\"";
        }
        out << level_id(r.level) << ',' << id << ',' << r.shared_tokens << '\n';
    }
}

}  // namespace focalforge
