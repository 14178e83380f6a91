#include "cleanup/distribution.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "cleanup/errors.hpp"
#include "compensated_sum.hpp"

namespace cleanup {
namespace {

double parse_double(std::string_view text, std::string_view what)
{
    double value = 0.0;
    auto const* end = text.data() + text.size();
    auto const [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end)
        throw DomainError("invalid number for " + std::string(what) + ": '" + std::string(text) + "'");
    return value;
}

long parse_long(std::string_view text, std::string_view what)
{
    long value = 0;
    auto const* end = text.data() + text.size();
    auto const [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end)
        throw DomainError("invalid integer for " + std::string(what) + ": '" + std::string(text) + "'");
    return value;
}

// Splits "key=value,key=value".
std::vector<std::pair<std::string_view, std::string_view>> parse_params(std::string_view text)
{
    std::vector<std::pair<std::string_view, std::string_view>> out;
    while (!text.empty())
    {
        auto const comma = text.find(',');
        std::string_view item = text.substr(0, comma);
        auto const eq = item.find('=');
        if (eq == std::string_view::npos)
            throw DomainError("distribution parameter without '=': '" + std::string(item) + "'");
        out.emplace_back(item.substr(0, eq), item.substr(eq + 1));
        if (comma == std::string_view::npos)
            break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

}  // namespace

Distribution::Distribution(Kind kind, std::vector<double> weights, std::string label)
    : kind_(kind), weights_(std::move(weights)), label_(std::move(label))
{
    if (weights_.empty())
        throw DomainError("distribution needs at least one object");
    for (double w : weights_)
    {
        if (!(w > 0.0) || !std::isfinite(w))
            throw DomainError("distribution weights must be finite and strictly positive");
    }
    detail::CompensatedSum total;
    for (double w : weights_)
        total += w;
    for (double& w : weights_)
        w /= total.value();

    cumulative_.resize(weights_.size());
    detail::CompensatedSum running;
    for (std::size_t i = 0; i < weights_.size(); ++i)
    {
        running += weights_[i];
        cumulative_[i] = running.value();
    }
    cumulative_.back() = 1.0;
}

Distribution Distribution::uniform(long n)
{
    if (n < 1)
        throw DomainError("uniform distribution needs n >= 1");
    return {Kind::uniform, std::vector<double>(static_cast<std::size_t>(n), 1.0), "uniform"};
}

Distribution Distribution::zipf(long n, double exponent)
{
    if (n < 1)
        throw DomainError("zipf distribution needs n >= 1");
    if (!(exponent > 0.0))
        throw DomainError("zipf exponent must be > 0");
    std::vector<double> weights(static_cast<std::size_t>(n));
    for (long i = 1; i <= n; ++i)
        weights[static_cast<std::size_t>(i - 1)] = std::pow(static_cast<double>(i), -exponent);
    std::ostringstream label;
    label << "zipf:s=" << exponent;
    return {Kind::zipf, std::move(weights), label.str()};
}

Distribution Distribution::skewed(long n, long r, double eps)
{
    if (n < 2)
        throw DomainError("skewed distribution needs n >= 2");
    if (r < 1 || r > n)
        throw DomainError("skewed distribution: r must be in [1, n]");
    if (!(eps > 0.0 && eps < 1.0))
        throw DomainError("skewed distribution: eps must be in (0, 1) so every weight is positive");
    std::vector<double> weights(static_cast<std::size_t>(n), eps / static_cast<double>(n - 1));
    weights[static_cast<std::size_t>(r - 1)] = 1.0 - eps;
    std::ostringstream label;
    label << "skewed:r=" << r << ",eps=" << eps;
    return {Kind::skewed, std::move(weights), label.str()};
}

Distribution Distribution::custom(std::vector<double> weights)
{
    return {Kind::custom, std::move(weights), "custom"};
}

Distribution Distribution::parse(std::string_view spec, long n)
{
    if (spec == "uniform")
        return uniform(n);

    auto const colon = spec.find(':');
    std::string_view const head = spec.substr(0, colon);
    std::string_view const tail = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);

    if (head == "zipf")
    {
        double exponent = 1.0;
        for (auto const& [key, value] : parse_params(tail))
        {
            if (key != "s")
                throw DomainError("unknown zipf parameter '" + std::string(key) + "'");
            exponent = parse_double(value, "zipf s");
        }
        return zipf(n, exponent);
    }
    if (head == "skewed")
    {
        long r = 0;
        double eps = -1.0;
        for (auto const& [key, value] : parse_params(tail))
        {
            if (key == "r")
                r = parse_long(value, "skewed r");
            else if (key == "eps")
                eps = parse_double(value, "skewed eps");
            else
                throw DomainError("unknown skewed parameter '" + std::string(key) + "'");
        }
        if (r == 0 || eps < 0.0)
            throw DomainError("skewed distribution needs both r=<i> and eps=<x>");
        return skewed(n, r, eps);
    }
    if (head == "custom")
    {
        if (tail.empty())
            throw DomainError("custom distribution needs a file path: custom:<path>");
        std::ifstream in{std::string(tail)};
        if (!in)
            throw DomainError("cannot open weight file '" + std::string(tail) + "'");
        std::vector<double> weights;
        std::string line;
        while (std::getline(in, line))
        {
            if (!line.empty() && line.back() == '\r')
                line.pop_back();
            if (line.empty())
                continue;
            weights.push_back(parse_double(line, "weight"));
        }
        if (static_cast<long>(weights.size()) != n)
            throw DomainError("weight file has " + std::to_string(weights.size()) + " weights, expected n=" +
                              std::to_string(n));
        return custom(std::move(weights));
    }
    throw DomainError("unknown distribution '" + std::string(spec) + "'");
}

std::string Distribution::describe() const
{
    return label_;
}

std::size_t Distribution::index_for(double u) const
{
    auto const it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    if (it == cumulative_.end())
        return cumulative_.size() - 1;
    return static_cast<std::size_t>(it - cumulative_.begin());
}

}  // namespace cleanup
