#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace gtlie {

/// Zero-based letter index. Genus-0: x_k is letter k-1. Symplectic: A_i is
/// letter 2(i-1), B_i is letter 2(i-1)+1, so A_1 < B_1 < A_2 < ...
using Letter = std::uint8_t;

enum class Mode { genus0, symplectic };

/// Alphabet and truncation degree shared by every series operand.
class AlgebraContext {
public:
    static constexpr int kMaxDegree = 24;

    static AlgebraContext genus0(int n, int degree);
    static AlgebraContext symplectic(int g, int degree);

    Mode mode() const { return mode_; }
    bool is_genus0() const { return mode_ == Mode::genus0; }
    bool is_symplectic() const { return mode_ == Mode::symplectic; }
    /// n in genus-0 mode, g in symplectic mode.
    int rank() const { return rank_; }
    int degree() const { return degree_; }
    int letter_count() const { return mode_ == Mode::genus0 ? rank_ : 2 * rank_; }

    AlgebraContext with_degree(int degree) const;

    /// Intersection pairing A_i.B_j = delta_ij, B_i.A_j = -delta_ij, others 0.
    int pairing(Letter a, Letter b) const;

    std::string letter_name(Letter a) const;
    /// "x3" or "3" in genus-0 mode; "A2"/"B2" in symplectic mode.
    Letter parse_letter(std::string_view text) const;

    Letter generator(int k) const;  // genus-0 x_k, 1-based
    Letter a_letter(int i) const;   // symplectic A_i, 1-based
    Letter b_letter(int i) const;   // symplectic B_i, 1-based

    std::string describe() const;

    bool operator==(const AlgebraContext&) const = default;

private:
    AlgebraContext(Mode mode, int rank, int degree);

    Mode mode_;
    int rank_;
    int degree_;
};

/// Throws ContextMismatch unless a == b.
void require_same_context(const AlgebraContext& a, const AlgebraContext& b, std::string_view op);

}  // namespace gtlie
