#ifndef ENCGRAM_RESULT_HPP
#define ENCGRAM_RESULT_HPP

#include <stdexcept>
#include <utility>
#include <variant>

namespace encgram {

/// Minimal value-or-error carrier for operations whose failures are data,
/// not exceptions (parsers, encoder construction).
template <class T, class E>
class Result {
public:
    Result(T value) : v_(std::in_place_index<0>, std::move(value)) {}
    Result(E error) : v_(std::in_place_index<1>, std::move(error)) {}

    bool ok() const { return v_.index() == 0; }
    explicit operator bool() const { return ok(); }

    T& value() {
        require(ok(), "Result::value() on error");
        return std::get<0>(v_);
    }
    const T& value() const {
        require(ok(), "Result::value() on error");
        return std::get<0>(v_);
    }
    E& error() {
        require(!ok(), "Result::error() on value");
        return std::get<1>(v_);
    }
    const E& error() const {
        require(!ok(), "Result::error() on value");
        return std::get<1>(v_);
    }

    T value_or(T fallback) const { return ok() ? std::get<0>(v_) : std::move(fallback); }

private:
    static void require(bool cond, const char* what) {
        if (!cond) throw std::logic_error(what);
    }

    std::variant<T, E> v_;
};

}  // namespace encgram

#endif  // ENCGRAM_RESULT_HPP
