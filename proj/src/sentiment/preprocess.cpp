#include "tweetmarket/sentiment/preprocess.hpp"

#include <cctype>

namespace tweetmarket::sentiment {

namespace {

bool is_ascii_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_word(char c) { return is_ascii_alpha(c) || (c >= '0' && c <= '9') || c == '_'; }
bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

bool starts_with_ci(std::string_view s, std::size_t at, std::string_view prefix) {
    if (s.size() - at < prefix.size()) return false;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        if (std::tolower(static_cast<unsigned char>(s[at + i])) != prefix[i]) return false;
    }
    return true;
}

// Step 1: drop URLs, cash-tags and mentions, leaving a space in their place.
std::string strip_entities(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        const bool boundary = i == 0 || !is_word(text[i - 1]);
        if (boundary && (starts_with_ci(text, i, "http://") || starts_with_ci(text, i, "https://") ||
                         starts_with_ci(text, i, "www."))) {
            while (i < text.size() && !is_space(text[i])) ++i;
            out += ' ';
            continue;
        }
        if (text[i] == '$' && i + 1 < text.size() && is_ascii_alpha(text[i + 1])) {
            ++i;
            while (i < text.size() && (is_ascii_alpha(text[i]) ||
                                       (text[i] == '.' && i + 1 < text.size() && is_ascii_alpha(text[i + 1])))) {
                ++i;
            }
            out += ' ';
            continue;
        }
        if (text[i] == '@' && i + 1 < text.size() && is_word(text[i + 1])) {
            ++i;
            while (i < text.size() && is_word(text[i])) ++i;
            out += ' ';
            continue;
        }
        out += text[i++];
    }
    return out;
}

bool token_char(unsigned char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '\'' || c >= 0x80;
}

}  // namespace

std::vector<std::string> preprocess(std::string_view text, const Lemmatizer& lemmatizer) {
    std::string s = strip_entities(text);
    for (auto& c : s) {
        if (c >= 'A' && c <= 'Z') c = char(c - 'A' + 'a');
    }
    std::string collapsed;
    collapsed.reserve(s.size());
    for (char c : s) {
        const auto n = collapsed.size();
        if (is_ascii_alpha(c) && n >= 2 && collapsed[n - 1] == c && collapsed[n - 2] == c) continue;
        collapsed += c;
    }

    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < collapsed.size()) {
        if (!token_char(static_cast<unsigned char>(collapsed[i]))) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < collapsed.size() && token_char(static_cast<unsigned char>(collapsed[j]))) ++j;
        std::string_view tok(collapsed.data() + i, j - i);
        while (!tok.empty() && tok.front() == '\'') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == '\'') tok.remove_suffix(1);
        if (!tok.empty()) tokens.push_back(lemmatizer ? lemmatizer(tok) : std::string(tok));
        i = j;
    }
    if (lemmatizer) std::erase_if(tokens, [](const std::string& t) { return t.empty(); });
    return tokens;
}

}  // namespace tweetmarket::sentiment
