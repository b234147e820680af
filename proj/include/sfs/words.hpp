#pragma once

// Finite words, morphisms and lazily expanded morphic streams.

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sfs {

using Letter = std::uint32_t;

/// A letter outside the domain of a morphism or alias table.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Invalid operation parameter (k < 1, n <= 0, ...).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The iterate limit of a morphism does not exist, or a search cap was hit.
class LimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A finite word over {0, ..., alphabet_size-1}.
class Word {
public:
    Word() = default;
    Word(std::vector<Letter> letters, Letter alphabet_size);
    Word(std::initializer_list<Letter> letters, Letter alphabet_size)
        : Word(std::vector<Letter>(letters), alphabet_size) {}

    /// The word a^n.
    static Word run(Letter a, std::size_t n, Letter alphabet_size);

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    Letter alphabet_size() const noexcept { return alphabet_size_; }
    Letter operator[](std::size_t i) const { return letters_[i]; }

    const std::vector<Letter> &letters() const & noexcept { return letters_; }
    std::vector<Letter> letters() && noexcept { return std::move(letters_); }
    std::span<const Letter> view() const noexcept { return letters_; }
    auto begin() const noexcept { return letters_.begin(); }
    auto end() const noexcept { return letters_.end(); }

    void push_back(Letter a);
    void append(std::span<const Letter> tail);
    void append(const Word &tail) { append(tail.view()); }
    void truncate(std::size_t n);
    void reserve(std::size_t n) { letters_.reserve(n); }

    Word repeated(std::size_t times) const;
    Word slice(std::size_t begin, std::size_t count) const;

    friend bool operator==(const Word &a, const Word &b) noexcept {
        return a.letters_ == b.letters_;
    }

private:
    std::vector<Letter> letters_;
    Letter alphabet_size_ = 0;
};

Word concat(const Word &a, const Word &b);

/// Non-erasing morphism. The domain may be a subset of {0, ..., n-1}
/// (e.g. {1, 2}); letters without an image are outside the domain.
class Morphism {
public:
    Morphism(std::vector<std::pair<Letter, Word>> images, Letter codomain_size);

    Letter codomain_size() const noexcept { return codomain_size_; }
    bool in_domain(Letter a) const noexcept {
        return a < images_.size() && !images_[a].empty();
    }
    const Word &image(Letter a) const;
    std::vector<Letter> domain() const;

    /// m(a) begins with a and |m(a)| >= 2.
    bool prolongable(Letter a) const;

private:
    std::vector<Word> images_;
    Letter codomain_size_;
};

Word apply_morphism(const Morphism &m, std::span<const Letter> w);
inline Word apply_morphism(const Morphism &m, const Word &w) {
    return apply_morphism(m, w.view());
}
/// m^times(w).
Word iterate(const Morphism &m, Word w, unsigned times);
/// outer(inner(a)) for every letter of inner's domain.
Morphism compose(const Morphism &outer, const Morphism &inner);

/// Gap map: interior zero-run lengths between consecutive 1's.
/// Throws DomainError when w has fewer than two 1's.
Word gamma(std::span<const Letter> w);
inline Word gamma(const Word &w) { return gamma(w.view()); }

/// How the mathematical index of a stream relates to storage offset 0.
enum class IndexBase : int { Zero = 0, One = 1 };

/// An infinite word known through a growing, cached prefix.
///
/// Copies share the cache: a stream is a pure function of the index, so
/// sharing is observationally the same as copying. All reads are
/// serialized through an internal mutex; `prefix` returns an immutable
/// snapshot that can be handed to other threads.
class MorphicStream {
public:
    using Generator = std::function<Letter(std::uint64_t)>;

    static MorphicStream fixed_point(const Morphism &m, Letter seed,
                                     IndexBase base = IndexBase::Zero);
    static MorphicStream from_generator(Generator g, Letter alphabet_size,
                                        IndexBase base = IndexBase::Zero);
    /// u u u ... for a non-empty word u.
    static MorphicStream periodic(const Word &period,
                                  IndexBase base = IndexBase::Zero);

    /// Letter at storage offset i (offset 0 is the first letter whatever
    /// the index base).
    Letter at(std::uint64_t i) const;
    /// First n letters.
    Word prefix(std::size_t n) const;

    IndexBase index_base() const noexcept;
    Letter alphabet_size() const noexcept;

private:
    struct State;
    explicit MorphicStream(std::shared_ptr<State> state)
        : state_(std::move(state)) {}
    std::shared_ptr<State> state_;
};

inline MorphicStream fixed_point(const Morphism &m, Letter seed) {
    return MorphicStream::fixed_point(m, seed);
}

// Serialization.

inline constexpr std::string_view kDigitAlias = "0123456789";

/// One character per letter, alias[a] for letter a.
std::string to_symbols(std::span<const Letter> w,
                       std::string_view alias = kDigitAlias);
inline std::string to_symbols(const Word &w,
                              std::string_view alias = kDigitAlias) {
    return to_symbols(w.view(), alias);
}
Word parse_symbols(std::string_view text, std::string_view alias = kDigitAlias);

/// Comma-separated integers.
std::string to_integer_list(std::span<const Letter> w);
inline std::string to_integer_list(const Word &w) {
    return to_integer_list(w.view());
}
Word parse_integer_list(std::string_view text);

/// "index,letter" lines with indices starting at the stream's base.
std::string to_index_csv(std::span<const Letter> w, IndexBase base);

} // namespace sfs
