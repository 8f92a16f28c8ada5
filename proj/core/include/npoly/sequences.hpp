#pragma once

#include "npoly/error.hpp"
#include "npoly/rational.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace npoly {

/// Degree and genus of a curve; the rank N = d + 1 - g is always derived.
class CurveProfile {
public:
    /// Throws Error(InvalidProfile) unless g >= 0 and d >= 2g + 1.
    CurveProfile(int degree, int genus);

    int degree() const noexcept { return degree_; }
    int genus() const noexcept { return genus_; }
    int rank() const noexcept { return degree_ + 1 - genus_; }

private:
    int degree_;
    int genus_;
};

/// Plateau / projection window (s, t), 1-based.
struct GapWindow {
    int s = 1;
    int t = 2;

    friend bool operator==(const GapWindow&, const GapWindow&) = default;
};

enum class WindowRegime {
    Strict,  // 1 <= s < t <= N - 2
    Relaxed, // 1 <= s < t <= N
};

// Both sequence types index from 1, following the math: seq(1) ... seq(N).

class ESequence {
public:
    ESequence() = default;
    explicit ESequence(std::vector<std::int64_t> values) : values_(std::move(values)) {}

    int size() const noexcept { return static_cast<int>(values_.size()); }
    std::int64_t operator()(int i) const { return values_.at(static_cast<std::size_t>(i - 1)); }
    std::span<const std::int64_t> values() const& noexcept { return values_; }
    std::span<const std::int64_t> values() const&& = delete;

    friend bool operator==(const ESequence&, const ESequence&) = default;

private:
    std::vector<std::int64_t> values_;
};

class RSequence {
public:
    RSequence() = default;
    explicit RSequence(std::vector<Rational> values) : values_(std::move(values))
    {
        for (auto& x : values_) x.canonicalize();
    }

    int size() const noexcept { return static_cast<int>(values_.size()); }
    const Rational& operator()(int i) const { return values_.at(static_cast<std::size_t>(i - 1)); }
    std::span<const Rational> values() const& noexcept { return values_; }
    std::span<const Rational> values() const&& = delete;

    friend bool operator==(const RSequence&, const RSequence&) = default;

private:
    std::vector<Rational> values_;
};

/// An (e, r, window) triple as read from an instance file.
struct Instance {
    ESequence e;
    RSequence r;
    GapWindow window;
};

/// Accept, or a structured rejection. `index` is the 1-based offending
/// position when the failure is positional, 0 otherwise.
struct Verdict {
    bool accepted = true;
    std::string reason;
    int index = 0;

    explicit operator bool() const noexcept { return accepted; }

    static Verdict accept() { return {}; }
    static Verdict reject(std::string reason, int index = 0)
    {
        return {false, std::move(reason), index};
    }
};

/// Degree-drop profile f_1 .. f_N of a complete linear series.
ESequence f_sequence(const CurveProfile& profile);

Verdict validate_window(int n, GapWindow window, WindowRegime regime);

/// e_1 = 0 and e nondecreasing.
Verdict check_e_sequence(const ESequence& e);
/// r nonincreasing.
Verdict check_r_sequence(const RSequence& r);
/// e_s = e_{s+1} = ... = e_{t-1}; vacuous when t = s + 1.
Verdict check_plateau(const ESequence& e, GapWindow window);

/// Full instance check: lengths, monotonicity, relaxed window, plateau.
Verdict validate_instance(const ESequence& e, const RSequence& r, GapWindow window);

/// r'_i = r_i - r_N.
RSequence normalize(const RSequence& r);

/// Throws Error(kind) carrying the verdict's reason when it rejects.
void require(const Verdict& verdict, ErrorKind kind);

} // namespace npoly
