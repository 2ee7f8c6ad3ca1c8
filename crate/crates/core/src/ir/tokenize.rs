/// Splits `text` into lowercased maximal alphanumeric runs, numbered from 0.
pub fn tokenize(text: &str) -> Vec<(String, usize)> {
    text.split(|c: char| !c.is_alphanumeric())
        .filter(|w| !w.is_empty())
        .map(str::to_lowercase)
        .enumerate()
        .map(|(pos, w)| (w, pos))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rhyme_line() {
        let t = tokenize("Pease porridge hot!");
        assert_eq!(t, [("pease".to_string(), 0), ("porridge".into(), 1), ("hot".into(), 2)]);
    }

    #[test]
    fn empty_and_punctuation() {
        assert!(tokenize("").is_empty());
        assert!(tokenize(" ,.;! ").is_empty());
        assert_eq!(tokenize("nine days old.").len(), 3);
        assert_eq!(tokenize("it's 42")[2], ("42".to_string(), 2));
    }
}
