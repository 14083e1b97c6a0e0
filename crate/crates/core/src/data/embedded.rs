#![allow(clippy::approx_constant)]

use crate::membership::{Connective, Label, MembershipTriple};
use crate::realspace::PairAngles;

use super::{ConceptPair, Dataset, Item};

/// Values printed next to an item in the reference corpus.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Reference {
    /// Printed label with Δ and k, for table rows.
    pub row: Option<(Label, f64, f64)>,
    pub model: Option<PrintedModel>,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PrintedModel {
    /// |A⟩ and |B⟩ of the interference model, β in degrees.
    C3 { vec_a: [f64; 3], vec_b: [f64; 3], beta: f64 },
    /// m²·sector + n²·average with zero interference.
    Convex { m2: f64, n2: f64, sector: f64, average: f64 },
}

struct PairSpec {
    id: &'static str,
    a: &'static str,
    b: &'static str,
    connective: Connective,
    angles: Option<(f64, f64)>,
}

struct Row {
    pair: &'static str,
    item: &'static str,
    mu: [f64; 3],
    row: Option<(Label, f64, f64)>,
    model: Option<PrintedModel>,
}

use Connective::{Conjunction as Conj, Disjunction as Disj};
use Label::{Classical as C, DeltaNonclassical as D};

const fn c3(vec_a: [f64; 3], vec_b: [f64; 3], beta: f64) -> Option<PrintedModel> {
    Some(PrintedModel::C3 { vec_a, vec_b, beta })
}

const fn cvx(m2: f64, n2: f64, sector: f64, average: f64) -> Option<PrintedModel> {
    Some(PrintedModel::Convex { m2, n2, sector, average })
}

const fn row(pair: &'static str, item: &'static str, mu: [f64; 3], label: Label, delta: f64, k: f64, model: Option<PrintedModel>) -> Row {
    Row { pair, item, mu, row: Some((label, delta, k)), model }
}

const fn extra(pair: &'static str, item: &'static str, mu: [f64; 3]) -> Row {
    Row { pair, item, mu, row: None, model: None }
}

const PAIRS: &[PairSpec] = &[
    PairSpec { id: "furniture_appliances", a: "Furniture", b: "Household Appliances", connective: Conj, angles: None },
    PairSpec { id: "food_plant", a: "Food", b: "Plant", connective: Conj, angles: None },
    PairSpec { id: "weapon_tool", a: "Weapon", b: "Tool", connective: Conj, angles: None },
    PairSpec { id: "building_dwelling", a: "Building", b: "Dwelling", connective: Conj, angles: Some((114.5, 0.0)) },
    PairSpec { id: "machine_vehicle", a: "Machine", b: "Vehicle", connective: Conj, angles: None },
    PairSpec { id: "bird_pet", a: "Bird", b: "Pet", connective: Conj, angles: None },
    PairSpec { id: "house_furnishings_furniture", a: "House Furnishings", b: "Furniture", connective: Disj, angles: None },
    PairSpec { id: "hobbies_games", a: "Hobbies", b: "Games", connective: Disj, angles: Some((108.4354, 12.0)) },
    PairSpec { id: "pets_farmyard_animals", a: "Pets", b: "Farmyard Animals", connective: Disj, angles: None },
    PairSpec { id: "spices_herbs", a: "Spices", b: "Herbs", connective: Disj, angles: Some((152.6, 50.0)) },
    PairSpec { id: "instruments_tools", a: "Instruments", b: "Tools", connective: Disj, angles: None },
    PairSpec { id: "sportswear_sports_equipment", a: "Sportswear", b: "Sports Equipment", connective: Disj, angles: Some((107.0, 12.95)) },
    PairSpec { id: "household_appliances_kitchen_utensils", a: "Household Appliances", b: "Kitchen Utensils", connective: Disj, angles: None },
    PairSpec { id: "fruits_vegetables", a: "Fruits", b: "Vegetables", connective: Disj, angles: None },
    PairSpec { id: "hawaii", a: "Exam passed", b: "Exam failed", connective: Disj, angles: None },
];

const ROWS: &[Row] = &[
    row("furniture_appliances", "Desk Lamp", [0.725, 0.825, 0.825], D, 0.1, 0.275, c3([0.8515, 0.0, 0.5244], [0.2576, 0.8710, -0.4183], 76.8253)),
    row("furniture_appliances", "Coffee Table", [1.0, 0.15, 5.0 / 13.0], D, 0.2346, 0.2346, cvx(0.4480, 0.5520, 0.15, 0.575)),
    row("furniture_appliances", "Painting", [8.0 / 13.0, 2.0 / 39.0, 2.0 / 19.0], D, 0.0540, 0.4386, cvx(0.7558, 0.2442, 0.0316, 0.3333)),
    row("food_plant", "Peppercorn", [0.875, 18.0 / 29.0, 22.0 / 29.0], D, 0.1379, 0.2629, c3([0.9354, 0.0, 0.3536], [0.2328, 0.7527, -0.6159], 87.1634)),
    row("food_plant", "Sponge", [1.0 / 38.0, 13.0 / 38.0, 3.0 / 34.0], D, 0.0619, 0.7198, cvx(0.5478, 0.4522, 0.0090, 0.1842)),
    row("weapon_tool", "Toothbrush", [0.0, 0.55, 0.0], C, 0.0, 0.45, cvx(1.0, 0.0, 0.0, 0.275)),
    row("weapon_tool", "Chisel", [0.4, 0.975, 25.0 / 39.0], D, 0.2410, 0.2660, c3([0.6325, 0.0, 0.7746], [0.1936, 0.9682, -0.1581], 112.3003)),
    row("building_dwelling", "Cave", [11.0 / 39.0, 0.95, 11.0 / 39.0], C, 0.0, 0.05, cvx(0.9595, 0.0405, 0.2679, 0.6160)),
    row("building_dwelling", "Tree House", [0.5, 0.9, 0.95], C, -0.05, 0.45, c3([0.8771, 0.0, 0.4804], [0.2148, 0.8944, -0.3922], 77.0244)),
    row("machine_vehicle", "Dogsled", [7.0 / 39.0, 0.925, 0.275], D, 0.0955, 0.1705, cvx(0.7178, 0.2822, 0.1660, 0.5522)),
    row("machine_vehicle", "Course Liner", [0.875, 0.875, 0.95], D, 0.075, 0.2, c3([0.9354, 0.0, 0.3536], [0.1336, 0.9258, -0.3536], 53.1301)),
    row("bird_pet", "Lark", [1.0, 0.275, 19.0 / 39.0], D, 0.2122, 0.2122, cvx(0.4147, 0.5853, 0.275, 0.6375)),
    row("bird_pet", "Elephant", [0.0, 0.25, 0.0], C, 0.0, 0.75, cvx(1.0, 0.0, 0.0, 0.125)),
    row("house_furnishings_furniture", "Wall-Hanging", [0.9, 0.4, 0.95], C, -0.05, 0.35, cvx(1.0, 0.0, 0.94, 0.65)),
    row("house_furnishings_furniture", "Door Bell", [0.5, 0.1, 0.55], C, -0.05, 0.05, cvx(1.0, 0.0, 0.55, 0.3)),
    row("house_furnishings_furniture", "Ashtray", [0.7, 0.3, 0.25], D, 0.45, 0.75, c3([0.8367, 0.0, 0.5477], [0.5477, 0.0, -0.8367], 123.0619)),
    row("house_furnishings_furniture", "Sink Unit", [0.9, 0.6, 0.6], D, 0.3, 0.9, c3([0.9487, 0.0, 0.3162], [0.2108, 0.7454, -0.6325], 138.5904)),
    row("hobbies_games", "Gardening", [1.0, 0.0, 1.0], C, 0.0, 0.0, cvx(1.0, 0.0, 1.0, 0.5)),
    row("hobbies_games", "Beer Drinking", [0.8, 0.2, 0.575], D, 0.225, 0.425, c3([0.4472, 0.0, 0.8944], [0.8421, 0.3015, -0.4472], 79.1931)),
    row("hobbies_games", "Stamp Collection", [1.0, 0.1, 1.0], C, 0.0, 0.1, cvx(1.0, 0.0, 1.0, 0.55)),
    row("hobbies_games", "Wrestling", [0.9, 0.6, 0.625], D, 0.275, 0.875, c3([0.9487, 0.0, 0.3162], [0.2108, 0.7454, -0.6325], 126.8699)),
    row("pets_farmyard_animals", "Collie Dog", [1.0, 0.7, 1.0], C, 0.0, 0.7, cvx(1.0, 0.0, 1.0, 0.85)),
    row("pets_farmyard_animals", "Rat", [0.5, 0.7, 0.4], D, 0.3, 0.8, c3([0.7071, 0.0, 0.7071], [0.5477, 0.6325, -0.5477], 121.0909)),
    row("pets_farmyard_animals", "Field Mouse", [0.1, 0.7, 0.4], D, 0.3, 0.4, c3([0.9487, 0.0, 0.3162], [0.2789, 0.4714, -0.8367], 90.0)),
    row("spices_herbs", "Molasses", [0.4, 0.05, 0.425], C, -0.025, 0.025, cvx(0.9756, 0.0244, 0.43, 0.225)),
    row("spices_herbs", "Salt", [0.75, 0.1, 0.6], D, 0.15, 0.25, c3([0.5, 0.0, 0.8660], [0.5477, 0.7746, -0.3162], 50.2820)),
    row("spices_herbs", "Curry", [0.9, 0.4, 0.75], D, 0.15, 0.55, c3([0.9487, 0.0, 0.3162], [0.2582, 0.5774, -0.7746], 65.9052)),
    row("spices_herbs", "Parsley", [0.5, 0.9, 0.95], C, -0.05, 0.45, cvx(1.0, 0.0, 0.95, 0.7)),
    row("instruments_tools", "Pencil Eraser", [0.4, 0.7, 0.45], D, 0.25, 0.65, c3([0.6325, 0.0, 0.7746], [0.6708, 0.5, -0.5477], 103.6330)),
    row("instruments_tools", "Computer", [0.6, 0.8, 0.6], D, 0.2, 0.8, c3([0.7746, 0.0, 0.6325], [0.3651, 0.8165, -0.4472], 110.7048)),
    row("instruments_tools", "Spoon", [0.65, 0.9, 0.7], D, 0.2, 0.85, c3([0.8185, 0.0, 0.5745], [0.2219, 0.9224, -0.3162], 117.8987)),
    row("instruments_tools", "Pliers", [0.8, 1.0, 1.0], C, 0.0, 0.8, cvx(1.0, 0.0, 1.0, 0.9)),
    row("sportswear_sports_equipment", "Sunglasses", [0.4, 0.2, 0.1], D, 0.3, 0.5, c3([0.7746, 0.0, 0.6325], [0.3651, 0.8165, -0.4472], 135.0)),
    row("sportswear_sports_equipment", "Golf Ball", [0.1, 1.0, 1.0], C, 0.0, 0.1, cvx(1.0, 0.0, 1.0, 0.55)),
    row("sportswear_sports_equipment", "Sailing Life Jacket", [1.0, 0.8, 1.0], C, 0.0, 0.8, cvx(1.0, 0.0, 1.0, 0.9)),
    row("sportswear_sports_equipment", "Tennis Racket", [0.2, 1.0, 1.0], C, 0.0, 0.2, cvx(1.0, 0.0, 1.0, 0.6)),
    row("household_appliances_kitchen_utensils", "Cake Tin", [0.4, 0.7, 0.95], C, -0.25, 0.15, c3([0.7071, 0.0, 0.7071], [0.7071, 0.0, -0.7071], 53.1301)),
    row("household_appliances_kitchen_utensils", "Cooking Stove", [1.0, 0.5, 1.0], C, 0.0, 0.5, cvx(1.0, 0.0, 1.0, 0.75)),
    row("household_appliances_kitchen_utensils", "Rubbish Bin", [0.5, 0.5, 0.8], C, -0.3, 0.2, c3([0.6325, 0.0, 0.7746], [0.6708, 0.5, -0.5477], 19.4712)),
    row("household_appliances_kitchen_utensils", "Spatula", [0.55, 0.9, 0.95], C, -0.05, 0.5, cvx(0.9783, 0.0217, 0.955, 0.725)),
    row("fruits_vegetables", "Apple", [1.0, 0.0, 1.0], C, 0.0, 0.0, cvx(1.0, 0.0, 1.0, 0.5)),
    row("fruits_vegetables", "Chili Pepper", [0.05, 0.5, 0.5], C, 0.0, 0.05, cvx(0.9, 0.1, 0.525, 0.275)),
    row("fruits_vegetables", "Raisin", [1.0, 0.0, 0.9], D, 0.1, 0.1, cvx(0.8, 0.2, 1.0, 0.5)),
    row("fruits_vegetables", "Tomato", [0.7, 0.7, 1.0], C, -0.3, 0.4, c3([0.7348, 0.0, 0.6782], [0.6052, 0.4513, -0.6557], 121.8967)),
    row("fruits_vegetables", "Peanut", [0.3, 0.1, 0.4], C, -0.1, 0.0, cvx(1.0, 0.0, 0.37, 0.2)),
    row("fruits_vegetables", "Elderberry", [1.0, 0.0, 0.8], D, 0.2, 0.2, cvx(0.6, 0.4, 1.0, 0.5)),
    extra("fruits_vegetables", "Almond", [0.2, 0.1, 0.425]),
    Row {
        pair: "hawaii",
        item: "Vacation Package",
        mu: [0.54, 0.57, 0.32],
        row: None,
        model: c3([0.7348, 0.0, 0.6782], [0.6052, 0.4513, -0.6557], 121.8967),
    },
    extra("sportswear_sports_equipment", "Diving Mask", [1.0, 1.0, 0.95]),
    extra("hobbies_games", "Discus Throwing", [1.0, 0.75, 0.7]),
    extra("machine_vehicle", "Sailboat", [22.0 / 39.0, 0.8, 8.0 / 19.0]),
    extra("machine_vehicle", "Raft", [8.0 / 39.0, 0.725, 0.2]),
    extra("machine_vehicle", "Backpack", [0.0, 0.0, 0.0]),
    extra("machine_vehicle", "Automobile", [1.0, 1.0, 1.0]),
    extra("machine_vehicle", "Bus", [1.0, 1.0, 1.0]),
    extra("machine_vehicle", "Horse Cart", [5.0 / 13.0, 0.95, 11.0 / 38.0]),
    extra("machine_vehicle", "Dishwasher", [1.0, 0.025, 0.0]),
    extra("furniture_appliances", "TV", [0.7, 0.9, 0.925]),
    extra("building_dwelling", "Library", [0.95, 0.175, 4.0 / 13.0]),
    extra("spices_herbs", "MSG", [0.15, 0.1, 0.425]),
    extra("spices_herbs", "Sugar", [0.0, 0.0, 0.2]),
    extra("spices_herbs", "Poppyseeds", [0.4, 0.4, 0.4]),
];

/// Reference corpus: published table rows and the items discussed in the
/// worked examples, grouped by concept pair.
pub fn embedded_samples() -> Dataset {
    let pairs = PAIRS
        .iter()
        .map(|spec| {
            let items = ROWS
                .iter()
                .filter(|r| r.pair == spec.id)
                .map(|r| {
                    let [a, b, c] = r.mu;
                    let triple = MembershipTriple::new(a, b, c, spec.connective).expect("embedded weights are valid");
                    let reference = (r.row.is_some() || r.model.is_some()).then_some(Reference { row: r.row, model: r.model });
                    Item { name: r.item.to_string(), triple, reference }
                })
                .collect();
            ConceptPair {
                pair_id: spec.id.to_string(),
                concept_a: Some(spec.a.to_string()),
                concept_b: Some(spec.b.to_string()),
                connective: spec.connective,
                angles: spec.angles.map(|(theta, phi)| PairAngles { theta, phi }),
                items,
            }
        })
        .collect();
    Dataset { pairs }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_row_belongs_to_a_pair() {
        for r in ROWS {
            assert!(PAIRS.iter().any(|p| p.id == r.pair), "{}", r.item);
        }
        assert_eq!(embedded_samples().len(), ROWS.len());
    }

    #[test]
    fn table_row_counts() {
        let d = embedded_samples();
        let rows = |c: Connective| {
            d.pairs
                .iter()
                .filter(|p| p.connective == c)
                .flat_map(|p| p.items.iter())
                .filter(|i| i.reference.is_some_and(|r| r.row.is_some()))
                .count()
        };
        assert_eq!(rows(Connective::Conjunction), 13);
        assert_eq!(rows(Connective::Disjunction), 33);
    }

    #[test]
    fn lookups() {
        let d = embedded_samples();
        let t = d.lookup("house_furnishings_furniture", "Ashtray").unwrap().triple;
        assert_eq!((t.mu_a, t.mu_b, t.mu_combo, t.connective), (0.7, 0.3, 0.25, Connective::Disjunction));
        let t = d.lookup("fruits_vegetables", "Apple").unwrap().triple;
        assert_eq!((t.mu_a, t.mu_b, t.mu_combo), (1.0, 0.0, 1.0));
        let t = d.lookup("bird_pet", "Elephant").unwrap().triple;
        assert_eq!((t.mu_a, t.mu_b, t.mu_combo, t.connective), (0.0, 0.25, 0.0, Connective::Conjunction));
    }
}
