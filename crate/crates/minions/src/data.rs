//! Machine-readable exports of the class roster and the clone order.
//!
//! Two JSON documents ship with the crate under `data/`:
//!
//! * `roster.json` — built by [`roster_document`]: one record per class
//!   (name, defining expression, stability-table row) followed by the
//!   derived stable-class listings.
//! * `clone_order.json` — built by [`clone_order_document`]: the 20 clone
//!   names and the full inclusion relation between them.
//!
//! The files are regenerated by the `dump_roster` and `dump_clone_order`
//! examples and pinned by an integration test, so the shipped copies cannot
//! drift from the library.

use serde_json::{json, Map, Value};

use crate::clones::{clone_leq, CloneId};
use crate::predicates::ClassId;
use crate::verify::{stable_classes_for, table2_row};

/// Clones that may act from the left, i.e. every clone containing the
/// self-dual monotone one.  Only the projection clone is excluded.
fn left_actors() -> impl Iterator<Item = CloneId> {
    CloneId::all().filter(|&c| clone_leq(CloneId::SM, c))
}

fn listing(c1: CloneId, c2: CloneId) -> Value {
    let classes = stable_classes_for(c1, c2)
        .expect("every listed clone contains the self-dual monotone clone");
    Value::Array(classes.into_iter().map(|c| c.name().into()).collect())
}

/// The roster document: every class in roster order with its defining
/// expression and its stability-table row (the largest clones that may act
/// on it from the right and from the left), plus the stable-class listings
/// for the projection action (`projection_stable`, keyed by the acting
/// clone) and for each clone acting on itself (`self_stable`).
pub fn roster_document() -> Value {
    let classes: Vec<Value> = ClassId::all()
        .map(|c| {
            let row = table2_row(c);
            json!({
                "name": c.name(),
                "expression": c.expr().to_string(),
                "right_clone": row.right_clone.name(),
                "left_clone": row.left_clone.name(),
            })
        })
        .collect();

    let mut projection_stable = Map::new();
    let mut self_stable = Map::new();
    for c in left_actors() {
        projection_stable.insert(c.name().to_owned(), listing(CloneId::Ic, c));
        self_stable.insert(c.name().to_owned(), listing(c, c));
    }

    json!({
        "classes": classes,
        "projection_stable": projection_stable,
        "self_stable": self_stable,
    })
}

/// The clone-order document: the clone names in canonical order and, for
/// each clone, the ascending list of clones that contain it (including
/// itself).
pub fn clone_order_document() -> Value {
    let clones: Vec<Value> = CloneId::all().map(|c| c.name().into()).collect();
    let mut leq = Map::new();
    for c in CloneId::all() {
        let above: Vec<Value> = CloneId::all()
            .filter(|&d| clone_leq(c, d))
            .map(|d| d.name().into())
            .collect();
        leq.insert(c.name().to_owned(), Value::Array(above));
    }
    json!({ "clones": clones, "leq": leq })
}
