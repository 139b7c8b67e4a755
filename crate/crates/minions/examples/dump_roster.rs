//! Regenerates `data/roster.json`.
//!
//! ```sh
//! cargo run --example dump_roster > crates/minions/data/roster.json
//! ```

fn main() {
    let doc = minions::roster_document();
    println!("{}", serde_json::to_string_pretty(&doc).expect("document serializes"));
}
