#include "stephen/word.hpp"

#include <algorithm>  // for all_of, equal, reverse
#include <stdexcept>  // for out_of_range

namespace stephen {

  Word Word::positive(std::initializer_list<std::uint32_t> indices) {
    return positive(std::vector<std::uint32_t>(indices));
  }

  Word Word::positive(std::vector<std::uint32_t> const& indices) {
    std::vector<SignedLetter> letters;
    letters.reserve(indices.size());
    for (auto i : indices) {
      letters.push_back({Letter{i}, false});
    }
    return Word(std::move(letters));
  }

  bool Word::is_positive() const noexcept {
    return std::all_of(_letters.begin(), _letters.end(), [](auto const& x) {
      return !x.inverse;
    });
  }

  Word Word::inverse() const {
    std::vector<SignedLetter> result;
    result.reserve(_letters.size());
    for (auto it = _letters.rbegin(); it != _letters.rend(); ++it) {
      result.push_back(it->inverted());
    }
    return Word(std::move(result));
  }

  Word Word::prefix(std::size_t k) const {
    k = std::min(k, _letters.size());
    return Word({_letters.begin(), _letters.begin() + k});
  }

  Word Word::suffix(std::size_t k) const {
    k = std::min(k, _letters.size());
    return Word({_letters.end() - k, _letters.end()});
  }

  std::size_t Word::count_occurrences(Word const& other) const {
    if (other.empty() || other.size() > size()) {
      return 0;
    }
    std::size_t count = 0;
    for (std::size_t i = 0; i + other.size() <= size(); ++i) {
      if (std::equal(other.begin(), other.end(), _letters.begin() + i)) {
        ++count;
      }
    }
    return count;
  }

  Word operator+(Word const& lhs, Word const& rhs) {
    std::vector<SignedLetter> letters(lhs._letters);
    letters.insert(letters.end(), rhs._letters.begin(), rhs._letters.end());
    return Word(std::move(letters));
  }

  Alphabet::Alphabet(std::initializer_list<std::string> names) {
    for (auto const& name : names) {
      add(name);
    }
  }

  bool Alphabet::add(std::string name) {
    if (_index.contains(name)) {
      return false;
    }
    _index.emplace(name, _names.size());
    _names.push_back(std::move(name));
    return true;
  }

  std::optional<Letter> Alphabet::find(std::string_view name) const {
    auto it = _index.find(std::string(name));
    if (it == _index.end()) {
      return std::nullopt;
    }
    return Letter{static_cast<std::uint32_t>(it->second)};
  }

  std::string const& Alphabet::name(Letter x) const {
    if (!contains(x)) {
      throw std::out_of_range("letter index " + std::to_string(x.index)
                              + " is not in the alphabet");
    }
    return _names[x.index];
  }

  bool Alphabet::contains(Word const& w) const noexcept {
    return std::all_of(
        w.begin(), w.end(), [this](auto const& x) { return contains(x.letter); });
  }

  bool Alphabet::single_character() const noexcept {
    return std::all_of(_names.begin(), _names.end(), [](auto const& name) {
      return name.size() == 1;
    });
  }

  std::string to_string(Word const& w, Alphabet const& alphabet) {
    bool const  compact = alphabet.single_character();
    std::string result;
    for (auto const& x : w) {
      if (!compact && !result.empty()) {
        result += ' ';
      }
      result += alphabet.name(x.letter);
      if (x.inverse) {
        result += '^';
      }
    }
    return result;
  }

  std::size_t WordHash::operator()(Word const& w) const noexcept {
    // FNV-1a over the letter labels.
    std::size_t h = 14695981039346656037ULL;
    for (auto const& x : w) {
      h ^= x.label();
      h *= 1099511628211ULL;
    }
    return h;
  }

}  // namespace stephen
