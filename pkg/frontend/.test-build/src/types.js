/** Shared shapes for the results document, analysis config, and curve responses. */
export {};
