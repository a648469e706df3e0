#include "paldef/word_source.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace paldef {

Morphism::Morphism(Alphabet alpha, std::map<Letter, std::string> letter_images)
    : alphabet(std::move(alpha)) {
    images.resize(alphabet.size());
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
        auto it = letter_images.find(alphabet.glyph(i));
        if (it == letter_images.end())
            throw ConfigError(std::string("morphism: no image for letter '") +
                              alphabet.glyph(i) + "'");
        if (it->second.empty())
            throw ConfigError("morphism: empty image");
        for (Letter g : it->second)
            if (!alphabet.contains(g))
                throw ConfigError(std::string("morphism: image letter '") + g +
                                  "' not in alphabet");
        images[i] = it->second;
        letter_images.erase(it);
    }
    if (!letter_images.empty())
        throw ConfigError("morphism: image given for letter outside alphabet");
}

const std::string& Morphism::image(Letter g) const {
    auto idx = alphabet.index_of(g);
    if (!idx) throw std::invalid_argument("morphism: letter not in alphabet");
    return images[*idx];
}

std::string Morphism::apply(std::string_view s) const {
    std::string out;
    for (Letter g : s) out += image(g);
    return out;
}

bool Morphism::prolongable_on(Letter seed) const {
    auto idx = alphabet.index_of(seed);
    if (!idx) return false;
    const std::string& im = images[*idx];
    return im.size() >= 2 && im[0] == seed;
}

WordSource::WordSource(Kind kind, Alphabet alphabet, std::string id)
    : kind_(std::move(kind)), alphabet_(std::move(alphabet)), id_(std::move(id)) {}

WordSource WordSource::explicit_word(Word w) {
    Alphabet a = w.alphabet();
    std::string id = "word:" + w.text();
    return WordSource(Explicit{std::move(w)}, std::move(a), std::move(id));
}

WordSource WordSource::periodic(Word period) {
    if (period.empty()) throw ConfigError("periodic source: empty period");
    Alphabet a = period.alphabet();
    std::string id = "periodic:" + period.text();
    return WordSource(Periodic{std::move(period)}, std::move(a), std::move(id));
}

WordSource WordSource::morphism_fixed_point(Morphism m, Letter seed) {
    if (!m.prolongable_on(seed))
        throw ConfigError("fixed point source: morphism not prolongable on seed");
    Alphabet a = m.alphabet;
    std::string id = std::string("morphism:") + seed;
    return WordSource(FixedPoint{std::move(m), seed}, std::move(a), std::move(id));
}

const std::vector<std::string>& WordSource::builtin_names() {
    static const std::vector<std::string> names = {
        "ab-omega", "fibonacci", "rote", "ternary-oddity", "thue-morse"};
    return names;
}

WordSource WordSource::builtin(std::string_view name) {
    if (name == "ab-omega") {
        Morphism m(Alphabet("ab"), {{'a', "ab"}, {'b', "b"}});
        return WordSource(FixedPoint{std::move(m), 'a'}, Alphabet("ab"), "ab-omega");
    }
    if (name == "fibonacci") {
        Morphism m(Alphabet("ab"), {{'a', "ab"}, {'b', "a"}});
        return WordSource(FixedPoint{std::move(m), 'a'}, Alphabet("ab"), "fibonacci");
    }
    if (name == "thue-morse") {
        Morphism m(Alphabet("ab"), {{'a', "ab"}, {'b', "ba"}});
        return WordSource(FixedPoint{std::move(m), 'a'}, Alphabet("ab"), "thue-morse");
    }
    if (name == "rote") {
        Morphism m(Alphabet("01"), {{'0', "001"}, {'1', "111"}});
        return WordSource(FixedPoint{std::move(m), '0'}, Alphabet("01"), "rote");
    }
    if (name == "ternary-oddity")
        return WordSource(TernaryBlocks{}, Alphabet("abc"), "ternary-oddity");
    throw ConfigError("unknown builtin word: " + std::string(name));
}

namespace {

std::string fixed_point_prefix(const Morphism& m, Letter seed, std::size_t length) {
    if (length == 0) return {};
    std::string s = m.image(seed);
    std::size_t i = 1;
    while (s.size() < length) {
        s += m.image(s[i]);
        ++i;
    }
    s.resize(length);
    return s;
}

std::string ternary_blocks_prefix(std::size_t length) {
    std::string u = "a";
    std::size_t level = 0;
    while (u.size() < length) {
        ++level;
        std::string next = u;
        next.append(level, 'b');
        next.append(level, 'c');
        next += u;
        u = std::move(next);
    }
    u.resize(length);
    return u;
}

} // namespace

Word WordSource::prefix(std::size_t length) const {
    if (const auto* e = std::get_if<Explicit>(&kind_)) {
        if (length > e->word.size())
            throw GenerationError("explicit word of length " +
                                  std::to_string(e->word.size()) +
                                  " cannot reach prefix length " + std::to_string(length));
        return e->word.subword(0, length);
    }
    if (const auto* p = std::get_if<Periodic>(&kind_)) {
        std::string out;
        out.reserve(length);
        while (out.size() + p->period.size() <= length) out += p->period.text();
        out += p->period.text().substr(0, length - out.size());
        return Word(alphabet_, std::move(out));
    }
    if (const auto* f = std::get_if<FixedPoint>(&kind_))
        return Word(alphabet_, fixed_point_prefix(f->morphism, f->seed, length));
    return Word(alphabet_, ternary_blocks_prefix(length));
}

namespace {

using nlohmann::json;

std::string require_string(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_string())
        throw ConfigError(std::string("config: missing string field '") + key + "'");
    return j.at(key).get<std::string>();
}

WordSource source_from_json(const json& j) {
    if (!j.is_object()) throw ConfigError("config: expected a JSON object");
    const std::string kind = require_string(j, "kind");
    if (kind == "explicit") {
        const std::string text = require_string(j, "word");
        if (j.contains("alphabet"))
            return WordSource::explicit_word(
                Word::parse(text, Alphabet(require_string(j, "alphabet"))));
        return WordSource::explicit_word(Word::parse(text));
    }
    if (kind == "periodic") {
        const std::string period = require_string(j, "period");
        if (j.contains("alphabet"))
            return WordSource::periodic(
                Word::parse(period, Alphabet(require_string(j, "alphabet"))));
        return WordSource::periodic(Word::parse(period));
    }
    if (kind == "morphism-fixed-point" || kind == "morphism") {
        Alphabet alphabet(require_string(j, "alphabet"));
        if (!j.contains("images") || !j.at("images").is_object())
            throw ConfigError("config: morphism needs an 'images' object");
        std::map<Letter, std::string> images;
        for (const auto& [key, value] : j.at("images").items()) {
            if (key.size() != 1 || !value.is_string())
                throw ConfigError("config: images map single-letter keys to strings");
            images[key[0]] = value.get<std::string>();
        }
        const std::string seed = require_string(j, "seed");
        if (seed.size() != 1) throw ConfigError("config: seed must be a single letter");
        return WordSource::morphism_fixed_point(Morphism(std::move(alphabet), std::move(images)),
                                                seed[0]);
    }
    if (kind == "builtin") return WordSource::builtin(require_string(j, "name"));
    throw ConfigError("config: unknown kind '" + kind + "'");
}

} // namespace

WordSource WordSource::from_config_text(std::string_view json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config: invalid JSON: ") + e.what());
    }
    return source_from_json(j);
}

WordSource WordSource::from_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return from_config_text(buf.str());
}

} // namespace paldef
