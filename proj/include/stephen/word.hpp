#ifndef STEPHEN_WORD_HPP_
#define STEPHEN_WORD_HPP_

#include <compare>           // for strong_ordering
#include <cstddef>           // for size_t
#include <cstdint>           // for uint32_t
#include <functional>        // for hash
#include <initializer_list>  // for initializer_list
#include <optional>          // for optional
#include <string>            // for string
#include <string_view>       // for string_view
#include <unordered_map>     // for unordered_map
#include <vector>            // for vector

namespace stephen {

  // A generator, identified by its position in an Alphabet.
  struct Letter {
    std::uint32_t index = 0;

    auto operator<=>(Letter const&) const = default;
  };

  // A generator or its formal inverse.
  struct SignedLetter {
    Letter letter;
    bool   inverse = false;

    // Dense encoding used for adjacency lookups: positive letters are even,
    // inverses odd, and the order is "alphabet order, then sign order".
    std::uint32_t label() const noexcept {
      return 2 * letter.index + (inverse ? 1 : 0);
    }

    static SignedLetter from_label(std::uint32_t label) noexcept {
      return {Letter{label / 2}, (label & 1) != 0};
    }

    SignedLetter inverted() const noexcept {
      return {letter, !inverse};
    }

    auto operator<=>(SignedLetter const&) const = default;
  };

  // A word over X ∪ X⁻¹. Not freely reduced: a a⁻¹ is kept as two letters.
  class Word {
   public:
    using const_iterator = std::vector<SignedLetter>::const_iterator;

    Word() = default;
    explicit Word(std::vector<SignedLetter> letters)
        : _letters(std::move(letters)) {}

    // Positive word from letter indices.
    static Word positive(std::initializer_list<std::uint32_t> indices);
    static Word positive(std::vector<std::uint32_t> const& indices);

    std::size_t size() const noexcept {
      return _letters.size();
    }
    bool empty() const noexcept {
      return _letters.empty();
    }
    SignedLetter const& operator[](std::size_t i) const {
      return _letters[i];
    }
    const_iterator begin() const noexcept {
      return _letters.begin();
    }
    const_iterator end() const noexcept {
      return _letters.end();
    }
    std::vector<SignedLetter> const& letters() const noexcept {
      return _letters;
    }

    void push_back(SignedLetter x) {
      _letters.push_back(x);
    }

    bool is_positive() const noexcept;

    // (a1 ... an)⁻¹ = an⁻¹ ... a1⁻¹
    Word inverse() const;

    Word prefix(std::size_t k) const;
    Word suffix(std::size_t k) const;

    // Number of positions at which `other` occurs as a factor.
    std::size_t count_occurrences(Word const& other) const;

    bool contains(Word const& other) const {
      return count_occurrences(other) > 0;
    }

    friend Word operator+(Word const& lhs, Word const& rhs);

    auto operator<=>(Word const&) const = default;
    bool operator==(Word const&) const = default;

   private:
    std::vector<SignedLetter> _letters;
  };

  // Ordered set of letter names. Indices are assigned in declaration order.
  class Alphabet {
   public:
    Alphabet() = default;
    Alphabet(std::initializer_list<std::string> names);

    // Returns false (and changes nothing) if the name is already present.
    bool add(std::string name);

    std::optional<Letter> find(std::string_view name) const;
    std::string const&    name(Letter x) const;

    std::size_t size() const noexcept {
      return _names.size();
    }
    bool contains(Letter x) const noexcept {
      return x.index < _names.size();
    }
    bool contains(Word const& w) const noexcept;

    std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    // True when every name is a single character, so words can be written
    // without separators.
    bool single_character() const noexcept;

    bool operator==(Alphabet const& that) const {
      return _names == that._names;
    }

   private:
    std::vector<std::string>                     _names;
    std::unordered_map<std::string, std::size_t> _index;
  };

  // Renders w using the alphabet's names, with a trailing '^' on inverses.
  // Letters are concatenated when every name is one character, otherwise
  // separated by spaces. The empty word renders as "".
  std::string to_string(Word const& w, Alphabet const& alphabet);

  struct WordHash {
    std::size_t operator()(Word const& w) const noexcept;
  };

}  // namespace stephen

#endif  // STEPHEN_WORD_HPP_
