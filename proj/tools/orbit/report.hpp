#pragma once

#include "orbit/exactnum/json_io.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace orbit::cli {

inline constexpr char const *version = "0.3.0";

/// 64-bit FNV-1a over a byte stream, updated incrementally.
class Digest
{
public:
	void update(std::string_view bytes);
	std::string hex() const;

private:
	std::uint64_t m_state = 0xcbf29ce484222325ULL;
};

struct RunReport
{
	std::string subcommand;
	std::string input_digest;
	Json result;
	std::optional<double> wall_time_ms;

	Json to_json() const;
};

enum class Format { json, table };

std::string render(RunReport const &r, Format f);
std::string render_error(std::string_view kind, std::string_view message, Format f);

/// Aligned two-column rendering of a JSON value, nested keys joined with '.'.
std::string table(Json const &value);

} // namespace orbit::cli
