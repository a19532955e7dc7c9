#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace penta {

/// Failure categories raised by the library. The CLI maps every kind except
/// `usage` to exit status 2.
enum class ErrorKind {
    non_finite,
    not_circulant,
    non_invertible,
    angle_undefined,
    domain_too_large,
    log_domain,
    pow_domain,
    form_domain,
    overflow,
    insufficient_terms,
    zero_tail,
    evaluation_failed,
    on_boundary,
    pole_on_path,
    non_invertible_on_path,
    invalid_path,
    no_convergence,
    invalid_pairing,
    degenerate,
    non_invertible_leading,
    invalid_argument,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::non_finite: return "NonFinite";
        case ErrorKind::not_circulant: return "NotCirculant";
        case ErrorKind::non_invertible: return "NonInvertible";
        case ErrorKind::angle_undefined: return "AngleUndefined";
        case ErrorKind::domain_too_large: return "DomainTooLarge";
        case ErrorKind::log_domain: return "LogDomain";
        case ErrorKind::pow_domain: return "PowDomain";
        case ErrorKind::form_domain: return "FormDomain";
        case ErrorKind::overflow: return "Overflow";
        case ErrorKind::insufficient_terms: return "InsufficientTerms";
        case ErrorKind::zero_tail: return "ZeroTail";
        case ErrorKind::evaluation_failed: return "EvaluationFailed";
        case ErrorKind::on_boundary: return "OnBoundary";
        case ErrorKind::pole_on_path: return "PoleOnPath";
        case ErrorKind::non_invertible_on_path: return "NonInvertibleOnPath";
        case ErrorKind::invalid_path: return "InvalidPath";
        case ErrorKind::no_convergence: return "NoConvergence";
        case ErrorKind::invalid_pairing: return "InvalidPairing";
        case ErrorKind::degenerate: return "Degenerate";
        case ErrorKind::non_invertible_leading: return "NonInvertibleLeading";
        case ErrorKind::invalid_argument: return "InvalidArgument";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace penta
