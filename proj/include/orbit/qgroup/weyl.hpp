#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace orbit::qgroup {

/// Type A_n: permutations of n+1 letters. Type B_n: signed permutations of n letters.
enum class WeylFamily { A, B };

WeylFamily parse_weyl_family(std::string_view name);
std::string to_string(WeylFamily f);

/// Element as the signed image list of 1..m; s_i swaps positions i and i+1
/// (i = 1..m-1), and in type B s_n negates position n.
struct WeylElement
{
	std::vector<int> images;
	std::vector<int> word; ///< reduced word in simple-reflection indices (1-based)
	std::size_t length = 0;

	bool is_identity() const { return length == 0; }
	std::string word_string() const; ///< "e" or "s1 s2 s1"
};

/// Right multiplication by the simple reflection s_i.
std::vector<int> apply_simple(WeylFamily f, std::vector<int> images, int i);

/// Element obtained by evaluating a word from the identity.
std::vector<int> evaluate_word(WeylFamily f, std::size_t rank, std::vector<int> const &word);

/// |W|: (rank+1)! for A, 2^rank rank! for B.
std::size_t weyl_order(WeylFamily f, std::size_t rank);

/// Breadth-first enumeration from the identity, ordered by (length, discovery).
/// Throws InputError if rank < 1 or |W| > 10^4.
std::vector<WeylElement> weyl_group(WeylFamily f, std::size_t rank);

} // namespace orbit::qgroup
