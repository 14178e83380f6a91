#include "cleanup/model.hpp"

#include "cleanup/errors.hpp"

namespace cleanup {

std::string_view Model::name() const
{
    if (memory == Memory::none)
        return numbered() ? "m2" : "m1";
    return numbered() ? "m4" : "m3";
}

Model Model::parse(std::string_view text)
{
    for (Model model : all_models)
    {
        if (model.name() == text)
            return model;
    }
    throw DomainError("unknown model '" + std::string(text) + "' (expected m1, m2, m3 or m4)");
}

}  // namespace cleanup
