#ifndef ENCGRAM_ERRORS_HPP
#define ENCGRAM_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace encgram {

/// Structured failure from document parsing. `path` addresses the offending
/// location in dot/bracket notation ("channels.mark.type", "tooltip[1].field");
/// it is empty for document-level syntax errors.
struct ParseError {
    std::string path;
    std::string message;

    std::string to_string() const {
        if (path.empty()) return message;
        return path + ": " + message;
    }
};

/// A scale was asked to build over an unusable domain or range.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// A scale operation was called on the wrong scale kind (e.g. bandwidth on
/// a linear scale).
class WrongKindError : public std::logic_error {
public:
    explicit WrongKindError(const std::string& what) : std::logic_error(what) {}
};

/// A channel name was looked up that the encoder does not have.
class UnknownChannelError : public std::invalid_argument {
public:
    explicit UnknownChannelError(const std::string& channel)
        : std::invalid_argument("unknown channel: " + channel) {}
};

/// encode was called while domain/range markers are still unresolved and no
/// context default applies to the channel.
class UnresolvedEncoderError : public std::logic_error {
public:
    explicit UnresolvedEncoderError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace encgram

#endif  // ENCGRAM_ERRORS_HPP
