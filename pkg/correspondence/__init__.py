# Relation calculus and component forms on ladders
