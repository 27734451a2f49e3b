#pragma once

#include "grateid/errors.hpp"

#include <Eigen/Core>

#include <string>
#include <vector>

namespace grateid {

struct MissingChannelError : ValidationError {
    using ValidationError::ValidationError;
};
struct NonFiniteDataError : ValidationError {
    using ValidationError::ValidationError;
};
struct LengthMismatchError : ValidationError {
    using ValidationError::ValidationError;
};

/// One uniformly sampled measurement signal. Immutable by convention: all
/// operations return new channels.
struct Channel {
    std::string name;
    std::string unit;
    Eigen::ArrayXd values;
    double sample_period = 0.0; // seconds

    Eigen::Index size() const { return values.size(); }

    /// Throws unless all samples are finite and the sample period is positive.
    void validate() const;
};

Channel make_channel(std::string name, Eigen::ArrayXd values, double sample_period,
                     std::string unit = {});

/// A set of channels sharing one time axis (equal length and sample period).
class Record {
public:
    Record() = default;

    void add(Channel ch);

    bool has(const std::string& name) const { return find(name) != nullptr; }
    const Channel* find(const std::string& name) const;
    const Channel& at(const std::string& name) const; // MissingChannelError

    const std::vector<Channel>& channels() const { return channels_; }
    Eigen::Index length() const { return channels_.empty() ? 0 : channels_.front().size(); }
    double sample_period() const { return channels_.empty() ? 0.0 : channels_.front().sample_period; }
    bool empty() const { return channels_.empty(); }

    /// Contiguous slice [begin, end) as a new record.
    Record slice(Eigen::Index begin, Eigen::Index end) const;

private:
    std::vector<Channel> channels_;
};

} // namespace grateid
