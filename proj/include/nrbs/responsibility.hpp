#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nrbs/model.hpp"

namespace nrbs {

struct MissingMonitoring : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The eight property rights: use, control and authoritative groups.
enum class RightKind {
    UseDirect,
    UseIndirect,
    Management,
    Exclusion,
    Transaction,
    Monitoring,
    Definition,
    Allocation,
};

enum class RightGroup { Use, Control, Authoritative };

RightGroup group_of(RightKind right);
std::string to_string(RightKind right);
RightKind parse_right(const std::string& token);
const std::vector<RightKind>& all_rights();

enum class ActorKind { AgencyMNR, AgencyMEE, Government, Company, Individual, Organization };

std::string to_string(ActorKind kind);
ActorKind parse_actor_kind(const std::string& token);

struct Actor {
    ActorKind kind;
    std::string name;

    static Actor mnr() { return {ActorKind::AgencyMNR, "MNR"}; }
    static Actor mee() { return {ActorKind::AgencyMEE, "MEE"}; }

    bool operator==(const Actor& rhs) const = default;
    auto operator<=>(const Actor& rhs) const = default;
};

/// (liability category x right) -> actors. Every category present in the
/// grid must carry a non-empty monitoring entry.
class RightsMatrix {
public:
    class Builder {
    public:
        Builder& add(Category category, RightKind right, Actor actor);
        RightsMatrix build() const;  // throws MissingMonitoring

    private:
        std::map<std::pair<Category, RightKind>, std::vector<Actor>> grid_;
    };

    const std::vector<Actor>& actors(Category category, RightKind right) const;
    std::vector<Category> categories() const;
    bool empty() const { return grid_.empty(); }

private:
    std::map<std::pair<Category, RightKind>, std::vector<Actor>> grid_;
    friend class Builder;
};

/// Creditor agency per liability category: overexploitation is owed to the
/// MNR, pollution and degradation to the MEE.
Actor assign_creditor(Category liability_category);

struct LiabilityRecord {
    Actor debtor;
    Actor creditor;
    std::optional<std::pair<Date, Date>> repayment_period;  // left unsolved
    Money expenditure;
    Category category;
    std::string item;
};

using DebtorMap = std::function<std::optional<Actor>(Category, const std::string&)>;

/// One record per liability line item carrying a recorded value; structural
/// "--" rows (no quantity, no price, zero value) are skipped. Default debtor
/// is a company when the map names none.
std::vector<LiabilityRecord> build_records(const BalanceSheet& sheet,
                                           const DebtorMap& debtor_map = nullptr);

/// Deterministic text table of the actor grid; flags empty monitoring cells.
std::string rights_report(const RightsMatrix& matrix);

}  // namespace nrbs
