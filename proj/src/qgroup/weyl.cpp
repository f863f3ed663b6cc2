#include "orbit/qgroup/weyl.hpp"

#include "orbit/errors.hpp"

#include <map>
#include <numeric>
#include <queue>

namespace orbit::qgroup {

WeylFamily parse_weyl_family(std::string_view name)
{
	if (name == "A" || name == "SU")
		return WeylFamily::A;
	if (name == "B" || name == "SO")
		return WeylFamily::B;
	throw InputError("unknown Weyl family '" + std::string(name) + "' (expected A or B)");
}

std::string to_string(WeylFamily f)
{
	return f == WeylFamily::A ? "A" : "B";
}

std::string WeylElement::word_string() const
{
	if (word.empty())
		return "e";
	std::string s;
	for (int i : word)
		s += (s.empty() ? "s" : " s") + std::to_string(i);
	return s;
}

namespace {

std::size_t letters(WeylFamily f, std::size_t rank)
{
	return f == WeylFamily::A ? rank + 1 : rank;
}

} // namespace

std::vector<int> apply_simple(WeylFamily f, std::vector<int> images, int i)
{
	auto const m = static_cast<int>(images.size());
	int const rank = f == WeylFamily::A ? m - 1 : m;
	if (i < 1 || i > rank)
		throw InputError("simple reflection index " + std::to_string(i) + " out of range");
	if (f == WeylFamily::B && i == rank)
		images[static_cast<std::size_t>(m - 1)] = -images[static_cast<std::size_t>(m - 1)];
	else
		std::swap(images[static_cast<std::size_t>(i - 1)], images[static_cast<std::size_t>(i)]);
	return images;
}

std::vector<int> evaluate_word(WeylFamily f, std::size_t rank, std::vector<int> const &word)
{
	std::vector<int> images(letters(f, rank));
	std::iota(images.begin(), images.end(), 1);
	for (int i : word)
		images = apply_simple(f, std::move(images), i);
	return images;
}

std::size_t weyl_order(WeylFamily f, std::size_t rank)
{
	std::size_t order = 1;
	for (std::size_t k = 2; k <= letters(f, rank); ++k)
		order *= k;
	if (f == WeylFamily::B)
		order <<= rank;
	return order;
}

std::vector<WeylElement> weyl_group(WeylFamily f, std::size_t rank)
{
	if (rank < 1)
		throw InputError("Weyl group rank must be at least 1");
	if (rank > 8 || weyl_order(f, rank) > 10000)
		throw InputError("Weyl group " + to_string(f) + std::to_string(rank) + " exceeds the 10^4 element guard");

	std::vector<WeylElement> elements;
	std::map<std::vector<int>, std::size_t> index;
	std::vector<int> identity = evaluate_word(f, rank, {});
	std::queue<std::vector<int>> frontier;
	index[identity] = 0;
	elements.push_back({identity, {}, 0});
	frontier.push(identity);
	auto const r = static_cast<int>(rank);
	while (!frontier.empty())
	{
		auto w = frontier.front();
		frontier.pop();
		std::size_t const len = elements[index[w]].length;
		for (int i = 1; i <= r; ++i)
		{
			auto ws = apply_simple(f, w, i);
			if (index.count(ws))
				continue;
			index[ws] = elements.size();
			elements.push_back({ws, {}, len + 1});
			frontier.push(std::move(ws));
		}
	}

	// greedy descent: w = (w s_i) s_i with l(w s_i) < l(w)
	for (auto &e : elements)
	{
		std::vector<int> reversed;
		auto w = e.images;
		std::size_t len = e.length;
		while (len > 0)
		{
			for (int i = 1; i <= r; ++i)
			{
				auto ws = apply_simple(f, w, i);
				if (elements[index[ws]].length < len)
				{
					reversed.push_back(i);
					w = std::move(ws);
					--len;
					break;
				}
			}
		}
		e.word.assign(reversed.rbegin(), reversed.rend());
	}
	return elements;
}

} // namespace orbit::qgroup
