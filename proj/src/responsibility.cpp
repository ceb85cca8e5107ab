#include "nrbs/responsibility.hpp"

#include <set>
#include <sstream>

namespace nrbs {

RightGroup group_of(RightKind right) {
    switch (right) {
        case RightKind::UseDirect:
        case RightKind::UseIndirect: return RightGroup::Use;
        case RightKind::Management:
        case RightKind::Exclusion:
        case RightKind::Transaction:
        case RightKind::Monitoring: return RightGroup::Control;
        case RightKind::Definition:
        case RightKind::Allocation: return RightGroup::Authoritative;
    }
    return RightGroup::Use;
}

std::string to_string(RightKind right) {
    switch (right) {
        case RightKind::UseDirect: return "use_direct";
        case RightKind::UseIndirect: return "use_indirect";
        case RightKind::Management: return "management";
        case RightKind::Exclusion: return "exclusion";
        case RightKind::Transaction: return "transaction";
        case RightKind::Monitoring: return "monitoring";
        case RightKind::Definition: return "definition";
        case RightKind::Allocation: return "allocation";
    }
    return "?";
}

const std::vector<RightKind>& all_rights() {
    static const std::vector<RightKind> rights = {
        RightKind::UseDirect,  RightKind::UseIndirect, RightKind::Management,
        RightKind::Exclusion,  RightKind::Transaction, RightKind::Monitoring,
        RightKind::Definition, RightKind::Allocation,
    };
    return rights;
}

RightKind parse_right(const std::string& token) {
    for (RightKind right : all_rights())
        if (to_string(right) == token) return right;
    throw ParseError("unknown right: " + token);
}

std::string to_string(ActorKind kind) {
    switch (kind) {
        case ActorKind::AgencyMNR: return "MNR";
        case ActorKind::AgencyMEE: return "MEE";
        case ActorKind::Government: return "Government";
        case ActorKind::Company: return "Company";
        case ActorKind::Individual: return "Individual";
        case ActorKind::Organization: return "Organization";
    }
    return "?";
}

ActorKind parse_actor_kind(const std::string& token) {
    static const std::vector<ActorKind> kinds = {
        ActorKind::AgencyMNR,  ActorKind::AgencyMEE,  ActorKind::Government,
        ActorKind::Company,    ActorKind::Individual, ActorKind::Organization,
    };
    for (ActorKind kind : kinds)
        if (to_string(kind) == token) return kind;
    throw ParseError("unknown actor kind: " + token);
}

RightsMatrix::Builder& RightsMatrix::Builder::add(Category category, RightKind right,
                                                  Actor actor) {
    if (!category_legal(Side::Liability, category))
        throw IllegalCategory("rights matrix rows must use liability categories, got " +
                              to_string(category));
    grid_[{category, right}].push_back(std::move(actor));
    return *this;
}

RightsMatrix RightsMatrix::Builder::build() const {
    std::set<Category> present;
    for (const auto& [key, actors] : grid_) present.insert(key.first);
    for (Category category : present) {
        auto it = grid_.find({category, RightKind::Monitoring});
        if (it == grid_.end() || it->second.empty())
            throw MissingMonitoring("no monitoring actor for " + to_string(category));
    }
    RightsMatrix matrix;
    matrix.grid_ = grid_;
    return matrix;
}

const std::vector<Actor>& RightsMatrix::actors(Category category, RightKind right) const {
    static const std::vector<Actor> none;
    auto it = grid_.find({category, right});
    return it == grid_.end() ? none : it->second;
}

std::vector<Category> RightsMatrix::categories() const {
    std::set<Category> present;
    for (const auto& [key, actors] : grid_) present.insert(key.first);
    return {present.begin(), present.end()};
}

Actor assign_creditor(Category liability_category) {
    switch (liability_category) {
        case Category::ResourceOverexploitation: return Actor::mnr();
        case Category::EnvironmentalPollution:
        case Category::EcologicalDegradation: return Actor::mee();
        default:
            throw IllegalCategory("not a liability category: " + to_string(liability_category));
    }
}

std::vector<LiabilityRecord> build_records(const BalanceSheet& sheet,
                                           const DebtorMap& debtor_map) {
    std::vector<LiabilityRecord> records;
    for (const auto& item : sheet.liabilities) {
        if (item.is_coverage_gap()) continue;  // "--" rows carry no recorded expenditure
        LiabilityRecord rec;
        std::optional<Actor> debtor;
        if (debtor_map) debtor = debtor_map(item.category, item.item);
        rec.debtor = debtor.value_or(Actor{ActorKind::Company, "Company"});
        rec.creditor = assign_creditor(item.category);
        rec.expenditure = item.value;
        rec.category = item.category;
        rec.item = item.item;
        records.push_back(std::move(rec));
    }
    return records;
}

std::string rights_report(const RightsMatrix& matrix) {
    std::ostringstream out;
    for (Category category : matrix.categories()) {
        out << to_string(category) << "\n";
        for (RightKind right : all_rights()) {
            out << "  " << to_string(right) << ": ";
            const auto& actors = matrix.actors(category, right);
            if (actors.empty()) {
                out << (right == RightKind::Monitoring ? "(MISSING)" : "-");
            } else {
                for (size_t i = 0; i < actors.size(); ++i) {
                    if (i) out << ", ";
                    out << to_string(actors[i].kind);
                    if (!actors[i].name.empty() && actors[i].name != to_string(actors[i].kind))
                        out << " (" << actors[i].name << ")";
                }
            }
            out << "\n";
        }
    }
    return out.str();
}

}  // namespace nrbs
