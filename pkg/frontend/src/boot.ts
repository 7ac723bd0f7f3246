/** Browser entry point. */

import { bootFromDocument } from './main.js';

bootFromDocument(document);
