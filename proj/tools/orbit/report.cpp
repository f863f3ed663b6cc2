#include "report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace orbit::cli {

namespace {

std::string scalar_text(Json const &v)
{
	if (v.is_string())
		return v.get<std::string>();
	return v.dump();
}

bool is_flat_array(Json const &v)
{
	return v.is_array() && std::all_of(v.begin(), v.end(), [](Json const &x) { return x.is_primitive(); });
}

void flatten(Json const &v, std::string const &path, std::vector<std::pair<std::string, std::string>> &rows)
{
	if (v.is_object())
	{
		if (v.empty())
			rows.emplace_back(path, "{}");
		for (auto it = v.begin(); it != v.end(); ++it)
			flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), rows);
	}
	else if (v.is_array() && !is_flat_array(v))
	{
		if (v.empty())
			rows.emplace_back(path, "[]");
		for (std::size_t i = 0; i < v.size(); ++i)
			flatten(v[i], path + "[" + std::to_string(i) + "]", rows);
	}
	else if (v.is_array())
	{
		std::string s;
		for (std::size_t i = 0; i < v.size(); ++i)
			s += (i ? "  " : "") + scalar_text(v[i]);
		rows.emplace_back(path, v.empty() ? "[]" : s);
	}
	else
		rows.emplace_back(path, scalar_text(v));
}

} // namespace

void Digest::update(std::string_view bytes)
{
	for (unsigned char c : bytes)
	{
		m_state ^= c;
		m_state *= 0x100000001b3ULL;
	}
	// separator so that ("ab","c") and ("a","bc") differ
	m_state ^= 0xff;
	m_state *= 0x100000001b3ULL;
}

std::string Digest::hex() const
{
	std::ostringstream os;
	os << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << m_state;
	return os.str();
}

Json RunReport::to_json() const
{
	Json j{{"subcommand", subcommand}, {"input_digest", input_digest}, {"result", result}, {"version", version}};
	if (wall_time_ms)
		j["wall_time_ms"] = *wall_time_ms;
	return j;
}

std::string table(Json const &value)
{
	std::vector<std::pair<std::string, std::string>> rows;
	flatten(value, "", rows);
	std::size_t width = 0;
	for (auto const &r : rows)
		width = std::max(width, r.first.size());
	std::ostringstream os;
	for (auto const &[k, v] : rows)
		os << std::left << std::setw(static_cast<int>(width)) << k << "  " << v << "\n";
	return os.str();
}

std::string render(RunReport const &r, Format f)
{
	if (f == Format::json)
		return r.to_json().dump(2) + "\n";
	std::ostringstream os;
	os << r.subcommand << "  (" << r.input_digest << ", version " << version << ")\n\n" << table(r.result);
	if (r.wall_time_ms)
		os << "\nwall time " << *r.wall_time_ms << " ms\n";
	return os.str();
}

std::string render_error(std::string_view kind, std::string_view message, Format f)
{
	Json j{{"error", {{"kind", kind}, {"message", message}}}};
	if (f == Format::json)
		return j.dump(2) + "\n";
	return "error (" + std::string(kind) + "): " + std::string(message) + "\n";
}

} // namespace orbit::cli
