#include "sfs/words.hpp"

#include <algorithm>
#include <charconv>
#include <mutex>
#include <optional>

namespace sfs {

namespace {

void check_letter(Letter a, Letter alphabet_size) {
    if (a >= alphabet_size) {
        throw DomainError("letter " + std::to_string(a) +
                          " outside alphabet of size " +
                          std::to_string(alphabet_size));
    }
}

} // namespace

Word::Word(std::vector<Letter> letters, Letter alphabet_size)
    : letters_(std::move(letters)), alphabet_size_(alphabet_size) {
    for (Letter a : letters_) check_letter(a, alphabet_size_);
}

Word Word::run(Letter a, std::size_t n, Letter alphabet_size) {
    check_letter(a, alphabet_size);
    Word w;
    w.alphabet_size_ = alphabet_size;
    w.letters_.assign(n, a);
    return w;
}

void Word::push_back(Letter a) {
    check_letter(a, alphabet_size_);
    letters_.push_back(a);
}

void Word::append(std::span<const Letter> tail) {
    for (Letter a : tail) check_letter(a, alphabet_size_);
    letters_.insert(letters_.end(), tail.begin(), tail.end());
}

void Word::truncate(std::size_t n) {
    if (n < letters_.size()) letters_.resize(n);
}

Word Word::repeated(std::size_t times) const {
    Word out;
    out.alphabet_size_ = alphabet_size_;
    out.letters_.reserve(letters_.size() * times);
    for (std::size_t i = 0; i < times; ++i) {
        out.letters_.insert(out.letters_.end(), letters_.begin(), letters_.end());
    }
    return out;
}

Word Word::slice(std::size_t begin, std::size_t count) const {
    Word out;
    out.alphabet_size_ = alphabet_size_;
    if (begin < letters_.size()) {
        auto last = std::min(letters_.size(), begin + count);
        out.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(begin),
                            letters_.begin() + static_cast<std::ptrdiff_t>(last));
    }
    return out;
}

Word concat(const Word &a, const Word &b) {
    Word out(a.letters(), std::max(a.alphabet_size(), b.alphabet_size()));
    out.append(b);
    return out;
}

Morphism::Morphism(std::vector<std::pair<Letter, Word>> images,
                   Letter codomain_size)
    : codomain_size_(codomain_size) {
    for (auto &[a, image] : images) {
        if (image.empty()) {
            throw ParameterError("morphism image of letter " +
                                 std::to_string(a) + " is empty");
        }
        for (Letter b : image) check_letter(b, codomain_size);
        if (a >= images_.size()) images_.resize(a + 1);
        if (!images_[a].empty()) {
            throw ParameterError("duplicate image for letter " +
                                 std::to_string(a));
        }
        images_[a] = Word(std::move(image).letters(), codomain_size);
    }
}

const Word &Morphism::image(Letter a) const {
    if (!in_domain(a)) {
        throw DomainError("letter " + std::to_string(a) +
                          " is outside the morphism domain");
    }
    return images_[a];
}

std::vector<Letter> Morphism::domain() const {
    std::vector<Letter> out;
    for (Letter a = 0; a < images_.size(); ++a) {
        if (!images_[a].empty()) out.push_back(a);
    }
    return out;
}

bool Morphism::prolongable(Letter a) const {
    if (!in_domain(a)) return false;
    const Word &img = images_[a];
    return img.size() >= 2 && img[0] == a;
}

Word apply_morphism(const Morphism &m, std::span<const Letter> w) {
    std::size_t total = 0;
    for (Letter a : w) total += m.image(a).size();
    std::vector<Letter> out;
    out.reserve(total);
    for (Letter a : w) {
        const Word &img = m.image(a);
        out.insert(out.end(), img.begin(), img.end());
    }
    return Word(std::move(out), m.codomain_size());
}

Word iterate(const Morphism &m, Word w, unsigned times) {
    for (unsigned i = 0; i < times; ++i) w = apply_morphism(m, w);
    return w;
}

Morphism compose(const Morphism &outer, const Morphism &inner) {
    std::vector<std::pair<Letter, Word>> images;
    for (Letter a : inner.domain()) {
        images.emplace_back(a, apply_morphism(outer, inner.image(a)));
    }
    return Morphism(std::move(images), outer.codomain_size());
}

Word gamma(std::span<const Letter> w) {
    std::vector<Letter> runs;
    std::optional<std::size_t> last_one;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] > 1) throw DomainError("gap map expects a binary word");
        if (w[i] == 1) {
            if (last_one) runs.push_back(static_cast<Letter>(i - *last_one - 1));
            last_one = i;
        }
    }
    if (runs.empty()) {
        throw DomainError("gap map needs at least two occurrences of 1");
    }
    Letter alphabet = *std::max_element(runs.begin(), runs.end()) + 1;
    return Word(std::move(runs), alphabet);
}

// ---------------------------------------------------------------------------

struct MorphicStream::State {
    std::mutex mutex;
    std::optional<Morphism> morphism;
    Generator generator;
    Letter alphabet_size = 0;
    IndexBase base = IndexBase::Zero;
    std::vector<Letter> cache;
    // Number of cache letters whose morphic image is already in the cache.
    std::size_t expanded = 0;

    void extend(std::size_t n) {
        if (cache.size() >= n) return;
        const std::size_t target = std::max(n, 2 * cache.size());
        cache.reserve(target);
        if (morphism) {
            while (cache.size() < target) {
                const Word &img = morphism->image(cache[expanded++]);
                cache.insert(cache.end(), img.begin(), img.end());
            }
        } else {
            for (std::size_t i = cache.size(); i < target; ++i) {
                Letter a = generator(i);
                check_letter(a, alphabet_size);
                cache.push_back(a);
            }
        }
    }
};

MorphicStream MorphicStream::fixed_point(const Morphism &m, Letter seed,
                                         IndexBase base) {
    Letter start = seed;
    if (!m.prolongable(seed)) {
        const Letter first = m.image(seed)[0];
        if (!m.prolongable(first)) {
            throw LimitError("no prolongable letter reachable from " +
                             std::to_string(seed) +
                             "; the iterate limit does not exist");
        }
        start = first;
    }
    auto state = std::make_shared<State>();
    state->morphism = m;
    state->alphabet_size = m.codomain_size();
    state->base = base;
    const Word &img = m.image(start);
    state->cache.assign(img.begin(), img.end());
    state->expanded = 1;
    return MorphicStream(std::move(state));
}

MorphicStream MorphicStream::from_generator(Generator g, Letter alphabet_size,
                                            IndexBase base) {
    auto state = std::make_shared<State>();
    state->generator = std::move(g);
    state->alphabet_size = alphabet_size;
    state->base = base;
    return MorphicStream(std::move(state));
}

MorphicStream MorphicStream::periodic(const Word &period, IndexBase base) {
    if (period.empty()) throw ParameterError("periodic stream needs a non-empty period");
    auto letters = period.letters();
    return from_generator(
        [letters](std::uint64_t i) { return letters[i % letters.size()]; },
        period.alphabet_size(), base);
}

Letter MorphicStream::at(std::uint64_t i) const {
    std::lock_guard lock(state_->mutex);
    state_->extend(static_cast<std::size_t>(i) + 1);
    return state_->cache[i];
}

Word MorphicStream::prefix(std::size_t n) const {
    std::lock_guard lock(state_->mutex);
    state_->extend(n);
    std::vector<Letter> out(state_->cache.begin(),
                            state_->cache.begin() + static_cast<std::ptrdiff_t>(n));
    return Word(std::move(out), state_->alphabet_size);
}

IndexBase MorphicStream::index_base() const noexcept { return state_->base; }

Letter MorphicStream::alphabet_size() const noexcept {
    return state_->alphabet_size;
}

// ---------------------------------------------------------------------------

std::string to_symbols(std::span<const Letter> w, std::string_view alias) {
    std::string out;
    out.reserve(w.size());
    for (Letter a : w) {
        if (a >= alias.size()) {
            throw DomainError("letter " + std::to_string(a) +
                              " has no printable alias");
        }
        out.push_back(alias[a]);
    }
    return out;
}

Word parse_symbols(std::string_view text, std::string_view alias) {
    std::vector<Letter> out;
    out.reserve(text.size());
    for (char c : text) {
        auto pos = alias.find(c);
        if (pos == std::string_view::npos) {
            throw DomainError(std::string("unknown symbol '") + c + "'");
        }
        out.push_back(static_cast<Letter>(pos));
    }
    return Word(std::move(out), static_cast<Letter>(alias.size()));
}

std::string to_integer_list(std::span<const Letter> w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(w[i]);
    }
    return out;
}

Word parse_integer_list(std::string_view text) {
    std::vector<Letter> out;
    Letter max_letter = 0;
    while (!text.empty()) {
        auto comma = text.find(',');
        auto field = text.substr(0, comma);
        Letter value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (ec != std::errc{} || ptr != field.data() + field.size()) {
            throw DomainError("bad integer field '" + std::string(field) + "'");
        }
        out.push_back(value);
        max_letter = std::max(max_letter, value);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    const Letter alphabet = out.empty() ? 0 : max_letter + 1;
    return Word(std::move(out), alphabet);
}

std::string to_index_csv(std::span<const Letter> w, IndexBase base) {
    std::string out = "index,letter\n";
    const auto offset = static_cast<std::size_t>(base);
    for (std::size_t i = 0; i < w.size(); ++i) {
        out += std::to_string(i + offset);
        out.push_back(',');
        out += std::to_string(w[i]);
        out.push_back('\n');
    }
    return out;
}

} // namespace sfs
